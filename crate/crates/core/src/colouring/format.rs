//! The `pqc 1` certificate file format.
//!
//! ```text
//! pqc 1
//! p <int>
//! q <int>
//! <element-label> <colour>
//! ...
//! ```
//!
//! Element labels must match the companion `heg 1` graph file; the
//! certificate stores labels only, never the graph itself.

use super::{CircularColouring, ColouringError};

pub(super) fn to_pqc_string(c: &CircularColouring) -> String {
    let mut out = format!("pqc 1\np {}\nq {}\n", c.p(), c.q());
    for (label, colour) in c.iter() {
        out.push_str(&format!("{label} {colour}\n"));
    }
    out
}

pub(super) fn from_pqc_str(text: &str) -> Result<CircularColouring, ColouringError> {
    let err = |line: usize, msg: String| ColouringError::Parse { line, msg };

    let mut header_seen = false;
    let mut p: Option<u32> = None;
    let mut q: Option<u32> = None;
    let mut pairs: Vec<(String, u32)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if !header_seen {
            if line != "pqc 1" {
                return Err(err(line_no, format!("expected header `pqc 1`, got `{line}`")));
            }
            header_seen = true;
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().expect("line is nonempty");
        let rest: Vec<&str> = tokens.collect();
        match (first, p.is_some(), q.is_some()) {
            ("p", false, _) => {
                let [value] = rest[..] else {
                    return Err(err(line_no, "p takes exactly one integer".into()));
                };
                p = Some(
                    value
                        .parse()
                        .map_err(|_| err(line_no, format!("invalid p value `{value}`")))?,
                );
            }
            ("q", true, false) => {
                let [value] = rest[..] else {
                    return Err(err(line_no, "q takes exactly one integer".into()));
                };
                q = Some(
                    value
                        .parse()
                        .map_err(|_| err(line_no, format!("invalid q value `{value}`")))?,
                );
            }
            (label, true, true) => {
                let [value] = rest[..] else {
                    return Err(err(
                        line_no,
                        format!("expected `<label> <colour>`, got `{line}`"),
                    ));
                };
                let colour: u32 = value
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid colour `{value}`")))?;
                pairs.push((label.to_string(), colour));
            }
            _ => {
                return Err(err(
                    line_no,
                    "expected `p <int>` then `q <int>` before assignments".into(),
                ));
            }
        }
    }
    if !header_seen {
        return Err(err(1, "missing `pqc 1` header".into()));
    }
    let p = p.ok_or_else(|| err(1, "missing `p` line".into()))?;
    let q = q.ok_or_else(|| err(1, "missing `q` line".into()))?;
    CircularColouring::with_assignment(p, q, pairs)
}
