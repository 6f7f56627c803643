//! The line-oriented diagram grammar.
//!
//! ```text
//! # comment
//! group Z2                # or Z<n>^<m>; omitted means the trivial group
//! label C1 = 1            # label of the first undotted component
//! cup> / x+ / cap<        # slices bottom to top; `/` also separates slices
//! ```

use crate::diagram::GKirbyDiagram;
use crate::error::{DiagramError, ValidationError};
use crate::group::LabelGroup;
use crate::trace::Trace;
use crate::word::{Event, Slice};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> DiagramError {
    DiagramError::Syntax { line, column, message: message.into() }
}

struct LabelLine {
    line: usize,
    column: usize,
    component: String,
    value: String,
}

/// Splits a line into whitespace-separated tokens with one-based columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter().map(|(s, t)| (text[..s].chars().count() + 1, t)).collect()
}

/// Parses and validates a diagram.
pub fn parse(text: &str) -> Result<GKirbyDiagram, DiagramError> {
    let mut group: Option<LabelGroup> = None;
    let mut label_lines = Vec::new();
    let mut slices = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body);
        let Some(&(col, first)) = toks.first() else { continue };
        match first {
            "group" => {
                if group.is_some() {
                    return Err(syntax(line, col, "group declared twice"));
                }
                let Some(&(gcol, g)) = toks.get(1) else {
                    return Err(syntax(line, col, "expected a group after `group`"));
                };
                if toks.len() > 2 {
                    return Err(syntax(line, toks[2].0, "unexpected token after group"));
                }
                group = Some(g.parse().map_err(|e: String| syntax(line, gcol, e))?);
            }
            "label" => {
                let rest = &body[body.find("label").expect("token present") + 5..];
                let Some((name, value)) = rest.split_once('=') else {
                    return Err(syntax(line, col, "expected `label C<i> = <element>`"));
                };
                label_lines.push(LabelLine {
                    line,
                    column: col,
                    component: name.trim().to_string(),
                    value: value.trim().to_string(),
                });
            }
            _ => {
                let mut events = Vec::new();
                for &(tcol, tok) in &toks {
                    if tok == "/" {
                        if events.is_empty() {
                            return Err(syntax(line, tcol, "empty slice"));
                        }
                        slices.push(Slice::new(std::mem::take(&mut events)));
                        continue;
                    }
                    match Event::parse_token(tok) {
                        Some(e) => events.push(e),
                        None => return Err(syntax(line, tcol, format!("unknown token `{tok}`"))),
                    }
                }
                if events.is_empty() {
                    return Err(syntax(line, toks.last().expect("nonempty").0, "empty slice"));
                }
                slices.push(Slice::new(events));
            }
        }
    }

    let group = group.unwrap_or_else(LabelGroup::trivial);
    let n = Trace::build(&slices)?.component_count();
    let mut labels = vec![None; n];
    for l in &label_lines {
        let idx = l
            .component
            .strip_prefix('C')
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&i| i >= 1)
            .ok_or_else(|| syntax(l.line, l.column, format!("bad component name `{}`", l.component)))?;
        if idx > n {
            return Err(ValidationError::UnknownComponent(l.component.clone()).into());
        }
        let value = group
            .parse_element(&l.value)
            .ok_or_else(|| syntax(l.line, l.column, format!("`{}` is not an element of {group}", l.value)))?;
        if labels[idx - 1].replace(value).is_some() {
            return Err(ValidationError::DuplicateLabel(l.component.clone()).into());
        }
    }
    let labels = labels.into_iter().map(|x| x.unwrap_or_else(|| group.zero())).collect();
    GKirbyDiagram::new(group, slices, labels)
}
