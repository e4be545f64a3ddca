//! Locating and parsing input files.

use std::path::{Path, PathBuf};

use hk_core::classify::SnakeWord;
use hk_core::poset::parse_poset;
use hk_core::Poset;

use crate::Failure;

/// Directory searched for inputs that do not exist as given.
pub const SEED_DIR_VAR: &str = "HK_SEED_DIR";

pub enum Loaded {
    Poset(Poset),
    Word(SnakeWord),
}

/// `path` as given, else `$HK_SEED_DIR/path`, else `$HK_SEED_DIR/<file name>`.
fn resolve(path: &str) -> Option<PathBuf> {
    let direct = PathBuf::from(path);
    if direct.is_file() {
        return Some(direct);
    }
    let dir = PathBuf::from(std::env::var_os(SEED_DIR_VAR)?);
    let joined = dir.join(&direct);
    if joined.is_file() {
        return Some(joined);
    }
    let named = dir.join(direct.file_name()?);
    named.is_file().then_some(named)
}

/// Read a poset file, or a word file when the first meaningful line is not
/// the `poset` header. Word files hold one word; `#` starts a comment.
pub fn load(path: &str) -> Result<Loaded, Failure> {
    let resolved = resolve(path).ok_or_else(|| Failure::input(format!("{path}: no such file")))?;
    let text = std::fs::read_to_string(&resolved).map_err(|e| Failure::input(format!("{path}: {e}")))?;
    parse_input(&resolved, &text)
}

fn parse_input(path: &Path, text: &str) -> Result<Loaded, Failure> {
    let shown = path.display();
    let meaningful: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    if meaningful.first().is_some_and(|&(_, l)| l == "poset") {
        return parse_poset(text)
            .map(Loaded::Poset)
            .map_err(|e| Failure::input(format!("{shown}:{}:{}: {}", e.line, e.column, e.message)));
    }
    match meaningful.as_slice() {
        [(_, word)] => word
            .parse()
            .map(Loaded::Word)
            .map_err(|e| Failure::input(format!("{shown}: {e}"))),
        [] => Err(Failure::input(format!("{shown}: empty input"))),
        [_, (line, _), ..] => Err(Failure::input(format!("{shown}:{line}:1: expected a single snake word"))),
    }
}
