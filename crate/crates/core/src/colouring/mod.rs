//! Circular `(p,q)`-total colourings and their checker.
//!
//! A colouring assigns every element of a [`TotalConflictGraph`] a colour in
//! `{0, ..., p-1}`; it is valid when every adjacent pair `a, b` satisfies
//! `q <= |c(a) - c(b)| <= p - q`. Validity is always established by
//! [`check`], never assumed: constructions and the solver both run their
//! output through it before handing a certificate to the caller.
//!
//! All values are immutable in practice (the mutating methods are used while
//! a colouring is being built); `check` is a pure function and safe to run
//! concurrently on shared inputs.

mod format;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::hegraph::TotalConflictGraph;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ColouringError {
    #[error("invalid parameters p={p}, q={q} (need p >= q >= 1)")]
    InvalidModulus { p: u32, q: u32 },
    #[error("colour {colour} out of range 0..{p} for element `{label}`")]
    ColourOutOfRange { label: String, colour: u32, p: u32 },
    #[error("element `{0}` assigned more than once")]
    DuplicateElement(String),
    #[error("no colour assigned to element `{0}`")]
    MissingElement(String),
    #[error("cannot merge colourings with different parameters: ({p1},{q1}) vs ({p2},{q2})")]
    ParameterMismatch { p1: u32, q1: u32, p2: u32, q2: u32 },
    #[error("joined half-edges `{h1}` and `{h2}` carry different colours ({c1} vs {c2})")]
    JoinConflict {
        h1: String,
        h2: String,
        c1: u32,
        c2: u32,
    },
    #[error("scale factor must be at least 1")]
    ZeroScale,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Which side of the circular distance constraint an adjacent pair broke.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolatedBound {
    /// `|c(a) - c(b)| < q`
    TooClose,
    /// `|c(a) - c(b)| > p - q`
    TooFar,
}

/// One adjacent pair breaking the constraint, with its colours.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub a: String,
    pub b: String,
    pub colour_a: u32,
    pub colour_b: u32,
    pub bound: ViolatedBound,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.bound {
            ViolatedBound::TooClose => "< q",
            ViolatedBound::TooFar => "> p-q",
        };
        write!(
            f,
            "({}, {}): |{} - {}| {}",
            self.a, self.b, self.colour_a, self.colour_b, rel
        )
    }
}

/// A `(p,q)` pair plus a mapping from element labels to colours in
/// `{0, ..., p-1}`.
///
/// `p >= 2q` is required as soon as the target graph has any adjacent pair;
/// the constructor only enforces `p >= q >= 1` so that degenerate conflict
/// graphs (no adjacencies) keep their colourings representable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CircularColouring {
    p: u32,
    q: u32,
    assignment: BTreeMap<String, u32>,
}

impl CircularColouring {
    pub fn new(p: u32, q: u32) -> Result<Self, ColouringError> {
        if q < 1 || p < q {
            return Err(ColouringError::InvalidModulus { p, q });
        }
        Ok(CircularColouring {
            p,
            q,
            assignment: BTreeMap::new(),
        })
    }

    pub fn with_assignment<I>(p: u32, q: u32, pairs: I) -> Result<Self, ColouringError>
    where
        I: IntoIterator<Item = (String, u32)>,
    {
        let mut c = Self::new(p, q)?;
        for (label, colour) in pairs {
            if c.assignment.contains_key(&label) {
                return Err(ColouringError::DuplicateElement(label));
            }
            c.set(&label, colour)?;
        }
        Ok(c)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<u32> {
        self.assignment.get(label).copied()
    }

    /// Assigns (or reassigns) a colour.
    pub fn set(&mut self, label: &str, colour: u32) -> Result<(), ColouringError> {
        if colour >= self.p {
            return Err(ColouringError::ColourOutOfRange {
                label: label.to_string(),
                colour,
                p: self.p,
            });
        }
        self.assignment.insert(label.to_string(), colour);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.assignment.iter().map(|(l, c)| (l.as_str(), *c))
    }

    /// Every colour replaced by `(colour + s) mod p`; same `(p,q)`.
    /// Validity is invariant under shifts.
    pub fn shift(&self, s: i64) -> Self {
        let p = self.p as i64;
        let assignment = self
            .assignment
            .iter()
            .map(|(l, &c)| (l.clone(), ((c as i64 + s).rem_euclid(p)) as u32))
            .collect();
        CircularColouring {
            p: self.p,
            q: self.q,
            assignment,
        }
    }

    /// Every colour multiplied by `n`; the result is declared with
    /// parameters `(n*p + 1, n*q)`. A valid colouring stays valid, and the
    /// extra `+1` leaves a slack of one colour above the largest multiple.
    pub fn scale(&self, n: u32) -> Result<Self, ColouringError> {
        if n < 1 {
            return Err(ColouringError::ZeroScale);
        }
        let assignment = self
            .assignment
            .iter()
            .map(|(l, &c)| (l.clone(), c * n))
            .collect();
        Ok(CircularColouring {
            p: n * self.p + 1,
            q: n * self.q,
            assignment,
        })
    }

    /// Rebuilds the assignment with every label passed through `f`.
    pub fn relabelled(
        &self,
        f: impl Fn(&str) -> String,
    ) -> Result<Self, ColouringError> {
        let mut assignment = BTreeMap::new();
        for (l, &c) in &self.assignment {
            let nl = f(l);
            if assignment.insert(nl.clone(), c).is_some() {
                return Err(ColouringError::DuplicateElement(nl));
            }
        }
        Ok(CircularColouring {
            p: self.p,
            q: self.q,
            assignment,
        })
    }

    /// Keeps only the elements accepted by the predicate.
    pub fn restricted(&self, keep: impl Fn(&str) -> bool) -> Self {
        CircularColouring {
            p: self.p,
            q: self.q,
            assignment: self
                .assignment
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, &c)| (l.clone(), c))
                .collect(),
        }
    }

    /// Writes the colouring in the `pqc 1` certificate format.
    pub fn to_pqc_string(&self) -> String {
        format::to_pqc_string(self)
    }

    /// Parses the `pqc 1` certificate format.
    pub fn from_pqc_str(text: &str) -> Result<Self, ColouringError> {
        format::from_pqc_str(text)
    }
}

/// Returns every adjacent pair of `t` violating `q <= |c(a)-c(b)| <= p-q`,
/// in ascending element-pair order; the empty list means the colouring is a
/// valid circular total colouring. Violations are reported exhaustively,
/// not fail-fast.
///
/// Errors when an element of `t` has no colour or a colour is out of range.
/// Labels in `c` that do not occur in `t` are ignored here; callers that
/// need exact label-set agreement check that separately.
pub fn check(
    t: &TotalConflictGraph,
    c: &CircularColouring,
) -> Result<Vec<Violation>, ColouringError> {
    let mut colours = Vec::with_capacity(t.len());
    for label in t.labels() {
        let colour = c
            .get(label)
            .ok_or_else(|| ColouringError::MissingElement(label.to_string()))?;
        if colour >= c.p() {
            return Err(ColouringError::ColourOutOfRange {
                label: label.to_string(),
                colour,
                p: c.p(),
            });
        }
        colours.push(colour);
    }
    let (p, q) = (c.p(), c.q());
    let mut violations = Vec::new();
    for &(i, j) in t.pairs() {
        let (ca, cb) = (colours[i as usize], colours[j as usize]);
        let d = ca.abs_diff(cb);
        let bound = if d < q {
            Some(ViolatedBound::TooClose)
        } else if d > p - q {
            Some(ViolatedBound::TooFar)
        } else {
            None
        };
        if let Some(bound) = bound {
            violations.push(Violation {
                a: t.label(i as usize).to_string(),
                b: t.label(j as usize).to_string(),
                colour_a: ca,
                colour_b: cb,
                bound,
            });
        }
    }
    Ok(violations)
}

/// Convenience: true iff `check` returns no violations.
pub fn is_valid(t: &TotalConflictGraph, c: &CircularColouring) -> Result<bool, ColouringError> {
    Ok(check(t, c)?.is_empty())
}

/// Combines block colourings into one colouring of an assembled graph.
///
/// All parts must share `(p,q)` and have pairwise disjoint label sets. Each
/// join `(h1, h2, edge)` consumes the two half-edge labels, which must carry
/// identical colours, and assigns that colour to the new edge label.
/// Validity of the result is *not* implied; run [`check`] on it.
pub fn merge(
    parts: &[&CircularColouring],
    joins: &[(&str, &str, &str)],
) -> Result<CircularColouring, ColouringError> {
    let Some(first) = parts.first() else {
        return CircularColouring::new(1, 1);
    };
    let (p, q) = (first.p(), first.q());
    for part in &parts[1..] {
        if part.p() != p || part.q() != q {
            return Err(ColouringError::ParameterMismatch {
                p1: p,
                q1: q,
                p2: part.p(),
                q2: part.q(),
            });
        }
    }
    let mut merged = CircularColouring::new(p, q)?;
    for part in parts {
        for (l, c) in part.iter() {
            if merged.get(l).is_some() {
                return Err(ColouringError::DuplicateElement(l.to_string()));
            }
            merged.set(l, c)?;
        }
    }
    for &(h1, h2, edge) in joins {
        let c1 = merged
            .get(h1)
            .ok_or_else(|| ColouringError::MissingElement(h1.to_string()))?;
        let c2 = merged
            .get(h2)
            .ok_or_else(|| ColouringError::MissingElement(h2.to_string()))?;
        if c1 != c2 {
            return Err(ColouringError::JoinConflict {
                h1: h1.to_string(),
                h2: h2.to_string(),
                c1,
                c2,
            });
        }
        merged.assignment.remove(h1);
        merged.assignment.remove(h2);
        if merged.get(edge).is_some() {
            return Err(ColouringError::DuplicateElement(edge.to_string()));
        }
        merged.set(edge, c1)?;
    }
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hegraph::HalfEdgeGraph;

    fn single_edge() -> TotalConflictGraph {
        HalfEdgeGraph::new(
            ["u".into(), "v".into()],
            [("uv".into(), "u".into(), "v".into())],
            [],
        )
        .unwrap()
        .conflict_graph()
    }

    fn colouring(p: u32, q: u32, pairs: &[(&str, u32)]) -> CircularColouring {
        CircularColouring::with_assignment(
            p,
            q,
            pairs.iter().map(|(l, c)| (l.to_string(), *c)),
        )
        .unwrap()
    }

    #[test]
    fn proper_triangle_colouring_is_valid() {
        let t = single_edge();
        let c = colouring(3, 1, &[("u", 0), ("v", 1), ("uv", 2)]);
        assert_eq!(check(&t, &c).unwrap(), vec![]);
    }

    #[test]
    fn too_close_pair_is_reported() {
        let t = single_edge();
        let c = colouring(5, 2, &[("u", 0), ("v", 1), ("uv", 3)]);
        let violations = check(&t, &c).unwrap();
        assert_eq!(violations.len(), 1);
        let v = &violations[0];
        assert_eq!((v.a.as_str(), v.b.as_str()), ("u", "v"));
        assert_eq!(v.bound, ViolatedBound::TooClose);
    }

    #[test]
    fn too_far_pair_is_reported() {
        let t = single_edge();
        // |4 - 0| = 4 > p - q = 3
        let c = colouring(5, 2, &[("u", 0), ("v", 2), ("uv", 4)]);
        let violations = check(&t, &c).unwrap();
        assert!(violations
            .iter()
            .any(|v| v.bound == ViolatedBound::TooFar && v.a == "u" && v.b == "uv"));
    }

    #[test]
    fn check_errors_on_missing_and_out_of_range() {
        let t = single_edge();
        let partial = colouring(3, 1, &[("u", 0), ("v", 1)]);
        assert_eq!(
            check(&t, &partial),
            Err(ColouringError::MissingElement("uv".into()))
        );
        assert!(CircularColouring::with_assignment(
            3,
            1,
            [("u".to_string(), 3u32)]
        )
        .is_err());
    }

    #[test]
    fn shift_identity_cases() {
        let c = colouring(4, 1, &[("u", 0), ("v", 2), ("uv", 3)]);
        assert_eq!(c.shift(0), c);
        assert_eq!(c.shift(4), c);
        assert_eq!(c.shift(-4), c);
        assert_eq!(c.shift(1).get("uv"), Some(0));
        assert_eq!(c.shift(-1).get("u"), Some(3));
    }

    #[test]
    fn scale_adds_slack() {
        let t = single_edge();
        let c = colouring(4, 1, &[("u", 0), ("v", 2), ("uv", 3)]);
        let s = c.scale(1).unwrap();
        assert_eq!((s.p(), s.q()), (5, 1));
        assert_eq!(s.get("v"), Some(2));
        assert_eq!(check(&t, &s).unwrap(), vec![]);
        assert_eq!(c.scale(0), Err(ColouringError::ZeroScale));
    }

    #[test]
    fn merge_disjoint_and_joined() {
        let a = colouring(5, 1, &[("A.x", 0), ("fa", 2)]);
        let b = colouring(5, 1, &[("B.x", 1), ("fb", 2)]);
        let plain = merge(&[&a, &b], &[]).unwrap();
        assert_eq!(plain.len(), 4);

        let joined = merge(&[&a, &b], &[("fa", "fb", "e0")]).unwrap();
        assert_eq!(joined.get("e0"), Some(2));
        assert_eq!(joined.get("fa"), None);
        assert_eq!(joined.len(), 3);
    }

    #[test]
    fn merge_rejects_conflicts() {
        let a = colouring(5, 1, &[("A.x", 0), ("fa", 2)]);
        let b = colouring(5, 1, &[("B.x", 1), ("fb", 3)]);
        assert_eq!(
            merge(&[&a, &b], &[("fa", "fb", "e0")]),
            Err(ColouringError::JoinConflict {
                h1: "fa".into(),
                h2: "fb".into(),
                c1: 2,
                c2: 3
            })
        );
        let c = colouring(7, 2, &[("C.x", 0)]);
        assert!(matches!(
            merge(&[&a, &c], &[]),
            Err(ColouringError::ParameterMismatch { .. })
        ));
        let dup = colouring(5, 1, &[("A.x", 4)]);
        assert_eq!(
            merge(&[&a, &dup], &[]),
            Err(ColouringError::DuplicateElement("A.x".into()))
        );
    }

    #[test]
    fn p1_colourings_match_classical_colourings() {
        // for q = 1 the circular constraint degenerates to plain inequality
        let t = single_edge();
        for (cu, cv, cuv) in [(0, 1, 2), (0, 0, 1), (2, 1, 2)] {
            let c = colouring(3, 1, &[("u", cu), ("v", cv), ("uv", cuv)]);
            let circular_ok = check(&t, &c).unwrap().is_empty();
            let classical_ok = cu != cv && cu != cuv && cv != cuv;
            assert_eq!(circular_ok, classical_ok);
        }
    }
}
