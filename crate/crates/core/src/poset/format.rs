//! Plain-text poset files.
//!
//! ```text
//! poset
//! elements: a b c
//! covers: a<b, b<c
//! ```
//!
//! Blank lines and `#` comments are ignored, whitespace around tokens is
//! free, and `a<b<c` is shorthand for `a<b, b<c`. Several `covers:` lines
//! accumulate.

use super::Poset;
use crate::error::{ParseError, PosetError};

/// Parse the text format into a [`Poset`].
pub fn parse_poset(text: &str) -> Result<Poset, ParseError> {
    let mut header_seen = false;
    let mut elements: Option<(usize, Vec<(String, usize)>)> = None;
    let mut relations: Vec<(String, String, usize, usize, usize)> = Vec::new();
    let mut covers_line = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let trimmed = content.trim();
        if !header_seen {
            if trimmed != "poset" {
                return Err(ParseError::new(line_no, indent + 1, "expected header `poset`"));
            }
            header_seen = true;
            continue;
        }
        let Some(colon) = trimmed.find(':') else {
            return Err(ParseError::new(line_no, indent + 1, "expected `elements:` or `covers:`"));
        };
        let key = trimmed[..colon].trim();
        let body_offset = indent + colon + 1;
        let body = &trimmed[colon + 1..];
        match key {
            "elements" => {
                if elements.is_some() {
                    return Err(ParseError::new(line_no, indent + 1, "duplicate `elements:` line"));
                }
                let mut labels = Vec::new();
                for (col, tok) in tokens(body, |c| c.is_whitespace()) {
                    labels.push((tok.to_string(), body_offset + col + 1));
                }
                elements = Some((line_no, labels));
            }
            "covers" => {
                covers_line.get_or_insert(line_no);
                for (col, item) in tokens(body, |c| c == ',') {
                    let item_col = body_offset + col + 1;
                    let parts: Vec<(usize, &str)> = tokens(item, |c| c == '<').collect();
                    let raw_parts = item.split('<').count();
                    if parts.len() < 2 || parts.len() != raw_parts {
                        return Err(ParseError::new(line_no, item_col, format!("malformed cover `{}`", item.trim())));
                    }
                    for w in parts.windows(2) {
                        let (ca, a) = w[0];
                        let (cb, b) = w[1];
                        for (c, s) in [w[0], w[1]] {
                            if s.chars().any(char::is_whitespace) {
                                return Err(ParseError::new(
                                    line_no,
                                    body_offset + col + c + 1,
                                    format!("malformed label `{s}`"),
                                ));
                            }
                        }
                        relations.push((
                            a.to_string(),
                            b.to_string(),
                            line_no,
                            body_offset + col + ca + 1,
                            body_offset + col + cb + 1,
                        ));
                    }
                }
            }
            other => {
                return Err(ParseError::new(line_no, indent + 1, format!("unknown key `{other}`")));
            }
        }
    }

    if !header_seen {
        return Err(ParseError::new(1, 1, "missing header `poset`"));
    }
    let Some((el_line, labels)) = elements else {
        return Err(ParseError::new(1, 1, "missing `elements:` line"));
    };

    let mut seen = std::collections::HashMap::new();
    for (i, (l, col)) in labels.iter().enumerate() {
        if seen.insert(l.as_str(), i).is_some() {
            return Err(ParseError::new(el_line, *col, format!("duplicate label `{l}`")));
        }
    }
    let mut rel = Vec::with_capacity(relations.len());
    for (a, b, line, col_a, col_b) in &relations {
        let ia = *seen
            .get(a.as_str())
            .ok_or_else(|| ParseError::new(*line, *col_a, format!("unknown label `{a}`")))?;
        let ib = *seen
            .get(b.as_str())
            .ok_or_else(|| ParseError::new(*line, *col_b, format!("unknown label `{b}`")))?;
        rel.push((ia, ib));
    }

    Poset::new(labels.iter().map(|(l, _)| l.clone()), &rel).map_err(|e| {
        let line = match e {
            PosetError::Cycle(_) => covers_line.unwrap_or(el_line),
            _ => el_line,
        };
        ParseError::new(line, 1, e.to_string())
    })
}

/// Split on `sep`, yielding trimmed nonempty tokens with their byte offset.
fn tokens(s: &str, sep: impl Fn(char) -> bool + Copy) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices().chain(std::iter::once((s.len(), ','))) {
        let at_end = i == s.len();
        if at_end || sep(c) {
            let piece = &s[start..i];
            let lead = piece.len() - piece.trim_start().len();
            if !piece.trim().is_empty() {
                out.push((start + lead, piece.trim()));
            }
            start = i + c.len_utf8();
        }
    }
    out.into_iter()
}

/// Canonical text: labels sorted, cover pairs sorted by label, LF endings.
pub fn serialize_poset(p: &Poset) -> String {
    let mut labels: Vec<&str> = p.labels().iter().map(String::as_str).collect();
    labels.sort_unstable();
    let mut covers: Vec<(&str, &str)> = p.covers().iter().map(|&(a, b)| (p.label(a), p.label(b))).collect();
    covers.sort_unstable();
    let mut out = String::from("poset\n");
    out.push_str("elements:");
    for l in labels {
        out.push(' ');
        out.push_str(l);
    }
    out.push_str("\ncovers:");
    let items: Vec<String> = covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
    if !items.is_empty() {
        out.push(' ');
        out.push_str(&items.join(", "));
    }
    out.push('\n');
    out
}
