//! Constructive circular total colourings with controlled boundary colours,
//! and the chain assemblies built from them.
//!
//! The base colouring reads a Latin square: edges `xiyj` take `l_ij`, the
//! vertex `xi` takes `l_i1`, and every `yj` and every half-edge takes 0.
//! Scaling by `n` then turns a `(k+1, 1)`-colouring into an
//! `(n(k+1)+1, n)`-colouring whose extra colour slot ("slack of 1" above the
//! largest multiple) makes room for the local recolourings that pin the two
//! boundary half-edges and their endpoints to prescribed values.
//!
//! The `thm_*` assemblies colour each block of `gkn(k, n)` with a shifted
//! copy of one of these boundary-controlled colourings, equalize the joined
//! half-edge colours, and place the hub colour last. Every function here
//! runs its result through [`crate::colouring::check`] and refuses to return
//! anything invalid.

use thiserror::Error;

use crate::colouring::{self, CircularColouring, ColouringError};
use crate::hegraph::{self, GraphError};
use crate::latin::{LatinError, LatinSquare};

#[derive(Error, Debug)]
pub enum ConstructionError {
    #[error(transparent)]
    Latin(#[from] LatinError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("Latin square order {got} does not match k = {expected}")]
    OrderMismatch { expected: usize, got: usize },
    #[error(
        "construction `{method}` produced an invalid colouring ({violations} violations; first: {first})"
    )]
    Fault {
        method: &'static str,
        violations: usize,
        first: String,
    },
    #[error("construction `{method}` exhausted its search space without a valid colouring")]
    Exhausted { method: &'static str },
}

/// The four colours a boundary-controlled block colouring fixes: the two
/// designated half-edges `e`, `e'` and their end vertices `x`, `x'`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundaryProfile {
    pub e: u32,
    pub e_prime: u32,
    pub x: u32,
    pub x_prime: u32,
}

impl BoundaryProfile {
    /// Reads the profile off a colouring by label; `None` if any is absent.
    pub fn read(
        c: &CircularColouring,
        e: &str,
        e_prime: &str,
        x: &str,
        x_prime: &str,
    ) -> Option<Self> {
        Some(BoundaryProfile {
            e: c.get(e)?,
            e_prime: c.get(e_prime)?,
            x: c.get(x)?,
            x_prime: c.get(x_prime)?,
        })
    }
}

fn require(cond: bool, msg: String) -> Result<(), ConstructionError> {
    if cond {
        Ok(())
    } else {
        Err(ConstructionError::ParamRange(msg))
    }
}

fn certify(
    method: &'static str,
    graph: &hegraph::HalfEdgeGraph,
    c: CircularColouring,
) -> Result<CircularColouring, ConstructionError> {
    let violations = colouring::check(&graph.conflict_graph(), &c)?;
    match violations.first() {
        None => Ok(c),
        Some(first) => Err(ConstructionError::Fault {
            method,
            violations: violations.len(),
            first: first.to_string(),
        }),
    }
}

/// The `(k+1, 1)`-total colouring of `hk(k)` read off a Latin square `L`:
/// `c(xiyj) = l_ij`, `c(xi) = l_i1`, and every `yj` and every half-edge
/// coloured 0. Valid for every valid Latin square of order `k`; the output
/// is certified by the checker before being returned.
pub fn all0(k: usize, latin: &LatinSquare) -> Result<CircularColouring, ConstructionError> {
    require(k >= 2, format!("all0 requires k >= 2, got {k}"))?;
    if latin.order() != k {
        return Err(ConstructionError::OrderMismatch {
            expected: k,
            got: latin.order(),
        });
    }
    let mut c = CircularColouring::new(k as u32 + 1, 1)?;
    for i in 1..=k {
        c.set(&format!("x{i}"), latin.entry(i, 1))?;
        c.set(&format!("e{i}"), 0)?;
        for j in 2..=k {
            c.set(&format!("x{i}y{j}"), latin.entry(i, j))?;
        }
    }
    for j in 2..=k {
        c.set(&format!("y{j}"), 0)?;
    }
    certify("all0", &hegraph::hk(k)?, c)
}

/// Shared tail of the tweak-style constructions: scale the base colouring
/// by `n`, recolour the half-edge `e{low}` to the top colour `p-1` (the
/// scaled colouring never uses it), then shift everything by 1. The result
/// fixes `e{low} = 0`, `e{high} = 1`, and the endpoint colours
/// `n * l_{low,1} + 1` and `n * l_{high,1} + 1`.
fn tweak_from_square(
    k: usize,
    n: usize,
    latin: &LatinSquare,
    low: usize,
    method: &'static str,
) -> Result<CircularColouring, ConstructionError> {
    let base = all0(k, latin)?;
    let mut scaled = base.scale(n as u32)?;
    scaled.set(&format!("e{low}"), scaled.p() - 1)?;
    certify(method, &hegraph::hk(k)?, scaled.shift(1))
}

/// An `(n(k+1)+1, n)`-total colouring of `hk(k)` with the boundary profile
/// `(0, 1, n+1, nk+1)` at `(e1, e2, x1, x2)`.
pub fn tweak(k: usize, n: usize) -> Result<CircularColouring, ConstructionError> {
    require(k >= 2, format!("tweak requires k >= 2, got {k}"))?;
    require(n >= 1, format!("tweak requires n >= 1, got {n}"))?;
    tweak_from_square(k, n, &LatinSquare::constrained(k)?, 1, "tweak")
}

/// Tweak variant carrying its boundary at the half-edges `e{a}` (colour 0,
/// endpoint `n+1`) and `e{b}` (colour 1, endpoint `nk+1`); used by the chain
/// assemblies, whose blocks keep the half-edges at `x1` and `xk`.
fn tweak_with_roles(
    k: usize,
    n: usize,
    a: usize,
    b: usize,
) -> Result<CircularColouring, ConstructionError> {
    let latin = LatinSquare::first_column_pinned(k, &[(a, 1), (b, k as u32)])?;
    tweak_from_square(k, n, &latin, a, "tweak")
}

/// The tweak variant used by [`thm_k3`]: a `(4q+1, q)`-total colouring of
/// `hk(3)` with `q = 2n-1` and boundary `(0, 1, 2n, 4n-1)` at
/// `(e1, e3, x1, x3)`.
fn k3_variant(n: usize) -> Result<CircularColouring, ConstructionError> {
    let q = 2 * n - 1;
    let latin = LatinSquare::first_column_pinned(3, &[(1, 1), (3, 2)])?;
    tweak_from_square(3, q, &latin, 1, "thm-k3")
}

/// A `(q(k+1)+1, q)`-total colouring of `hk(k)` with the boundary profile
/// `(0, 2, qk+1, q+2)` at `(ek, e1, xk, x1)`.
///
/// Built from the back-circulant square: after scaling by `q`, the colours
/// at or above `q*i` among the elements incident to `xi` (`i <= k-1`) move
/// up by 1 — with this square that is exactly the closed-form rule "edge
/// `xiyj` gains 1 iff `i + j <= k + 1`, and `xi` gains 1". The vacated
/// slots admit `e1 = 1` and `ek = p-1`, and a final global shift by 1
/// produces the stated boundary.
pub fn refine(k: usize, q: usize) -> Result<CircularColouring, ConstructionError> {
    require(k >= 2, format!("refine requires k >= 2, got {k}"))?;
    require(q >= 1, format!("refine requires q >= 1, got {q}"))?;
    let latin = LatinSquare::back_circulant(k)?;
    let base = all0(k, &latin)?;
    let mut c = base.scale(q as u32)?;
    let p = c.p();
    for i in 1..k {
        let xi = format!("x{i}");
        c.set(&xi, c.get(&xi).expect("x coloured") + 1)?;
        for j in 2..=k {
            if i + j <= k + 1 {
                let edge = format!("x{i}y{j}");
                c.set(&edge, c.get(&edge).expect("edge coloured") + 1)?;
            }
        }
    }
    c.set("e1", 1)?;
    c.set(&format!("e{k}"), p - 1)?;
    certify("refine", &hegraph::hk(k)?, c.shift(1))
}

/// Outcome of one chain assembly attempt: either a certified colouring, or
/// a checker rejection (callers then try the other block orientation).
enum ChainOutcome {
    Valid(CircularColouring),
    Invalid,
}

/// Transports a colouring of `hk(k)` through the automorphism exchanging
/// the end vertices `x1` and `xk` (and with them `e1`, `ek` and the edge
/// rows `x1yj`, `xkyj`). Validity is preserved; the boundary roles of the
/// two retained half-edges swap.
fn swap_block_ends(
    c: &CircularColouring,
    k: usize,
) -> Result<CircularColouring, ColouringError> {
    let xk = format!("x{k}");
    let ek = format!("e{k}");
    let xky = format!("x{k}y");
    c.relabelled(|l| {
        if l == "x1" {
            xk.clone()
        } else if l == xk {
            "x1".to_string()
        } else if l == "e1" {
            ek.clone()
        } else if l == ek {
            "e1".to_string()
        } else if let Some(j) = l.strip_prefix("x1y") {
            format!("x{k}y{j}")
        } else if let Some(j) = l.strip_prefix(&xky) {
            format!("x1y{j}")
        } else {
            l.to_string()
        }
    })
}

/// Assembles a colouring of `gkn(k, n)` from per-block colourings of
/// `hk(k)`. Block `i` is `blocks[i-1]`, restricted to the half-edges `e1`
/// and `ek`, relabelled into the block namespace, and shifted so that the
/// colours of joined half-edges agree (the join colour becomes the colour of
/// the edge `e{i}`). The incoming role `f'{i}` always sits at the block's
/// `x1` and the outgoing role `f{i}` at its `xk`, matching the generator;
/// `flipped = true` first transports the block colouring through the
/// `x1 <-> xk` automorphism, swapping which boundary half-edge carries
/// which colour.
///
/// The hub colour is either fixed or, with `None`, the smallest colour
/// compatible with the hub's four neighbours. The merged colouring is
/// checked before being reported valid.
fn assemble_chain(
    k: usize,
    n: usize,
    blocks: &[(&CircularColouring, bool)],
    u_colour: Option<u32>,
) -> Result<ChainOutcome, ConstructionError> {
    assert_eq!(blocks.len(), n);
    let (p, q) = (blocks[0].0.p(), blocks[0].0.q());
    let ek = format!("e{k}");

    let mut parts: Vec<CircularColouring> = Vec::with_capacity(n + 1);
    let mut shift = 0i64;
    let mut prev_out = 0u32;
    for (idx, &(base, flipped)) in blocks.iter().enumerate() {
        let i = idx + 1;
        let oriented;
        let base = if flipped {
            oriented = swap_block_ends(base, k)?;
            &oriented
        } else {
            base
        };
        let c_in = base.get("e1").expect("boundary half-edge coloured");
        let c_out = base.get(&ek).expect("boundary half-edge coloured");
        if i > 1 {
            shift = (prev_out as i64 - c_in as i64).rem_euclid(p as i64);
        }
        prev_out = ((c_out as i64 + shift).rem_euclid(p as i64)) as u32;
        let part = base
            .restricted(|l| !l.starts_with('e') || l == "e1" || l == ek)
            .relabelled(|l| {
                if l == "e1" {
                    format!("f'{i}")
                } else if l == ek {
                    format!("f{i}")
                } else {
                    format!("B{i}.{l}")
                }
            })?
            .shift(shift);
        parts.push(part);
    }

    let e0 = parts[0].get("f'1").expect("incoming half coloured");
    let en = parts[n - 1]
        .get(&format!("f{n}"))
        .expect("outgoing half coloured");
    let x_in = parts[0].get("B1.x1").expect("incoming endpoint coloured");
    let x_out = parts[n - 1]
        .get(&format!("B{n}.x{k}"))
        .expect("outgoing endpoint coloured");

    let hub = match u_colour {
        Some(c) => c,
        None => {
            let ok = |c: u32| {
                [e0, en, x_in, x_out].iter().all(|&b| {
                    let d = c.abs_diff(b);
                    d >= q && d <= p - q
                })
            };
            match (0..p).find(|&c| ok(c)) {
                Some(c) => c,
                None => return Ok(ChainOutcome::Invalid),
            }
        }
    };

    let b0 = CircularColouring::with_assignment(
        p,
        q,
        [
            ("f0".to_string(), e0),
            (format!("f'{}", n + 1), en),
            ("u".to_string(), hub),
        ],
    )?;
    parts.push(b0);

    let joins_owned: Vec<(String, String, String)> = (0..=n)
        .map(|i| (format!("f{i}"), format!("f'{}", i + 1), format!("e{i}")))
        .collect();
    let joins: Vec<(&str, &str, &str)> = joins_owned
        .iter()
        .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
        .collect();
    let part_refs: Vec<&CircularColouring> = parts.iter().collect();
    let merged = colouring::merge(&part_refs, &joins)?;

    let graph = hegraph::gkn(k, n)?;
    let violations = colouring::check(&graph.conflict_graph(), &merged)?;
    Ok(if violations.is_empty() {
        ChainOutcome::Valid(merged)
    } else {
        ChainOutcome::Invalid
    })
}

/// An `(n(k+1)+1, n)`-total colouring of `gkn(k, n)`, witnessing that its
/// circular total chromatic number is at most `k + 1 + 1/n`.
///
/// For `k >= 3` the blocks are shifted copies of one boundary-controlled
/// tweak colouring, giving `e{i}` the colour `i` and the hub `u` the colour
/// `2n+1`; both block orientations are tried and the checker keeps the valid
/// one. For `k = 2` that block scheme admits no hub colour, and `gkn(2, n)`
/// is a plain cycle on `3n+1` vertices, so the colouring walks the cycle
/// assigning colour `t*n mod (3n+1)` to the `t`-th element.
pub fn thm_lim(k: usize, n: usize) -> Result<CircularColouring, ConstructionError> {
    require(k >= 2, format!("thm-lim requires k >= 2, got {k}"))?;
    require(n >= 1, format!("thm-lim requires n >= 1, got {n}"))?;
    if k == 2 {
        return lim_cycle(n);
    }
    let base = tweak_with_roles(k, n, 1, k)?;
    let hub = 2 * n as u32 + 1;
    for flipped in [false, true] {
        let blocks: Vec<(&CircularColouring, bool)> = vec![(&base, flipped); n];
        if let ChainOutcome::Valid(c) = assemble_chain(k, n, &blocks, Some(hub))? {
            return Ok(c);
        }
    }
    Err(ConstructionError::Exhausted { method: "thm-lim" })
}

/// Direct `(3n+1, n)`-total colouring of the cycle `gkn(2, n)`: elements in
/// cyclic order get colours `0, n, 2n, ...` mod `3n+1`. Consecutive elements
/// differ by exactly `n` and elements two apart by `n+1` circularly, and
/// `2(3n+1)` steps of `+n` close the cycle exactly.
fn lim_cycle(n: usize) -> Result<CircularColouring, ConstructionError> {
    let p = 3 * n as u32 + 1;
    let mut order: Vec<String> = vec!["u".to_string()];
    for i in 1..=n {
        order.push(format!("e{}", i - 1));
        for l in ["x1", "x1y2", "y2", "x2y2", "x2"] {
            order.push(format!("B{i}.{l}"));
        }
    }
    order.push(format!("e{n}"));
    let c = CircularColouring::with_assignment(
        p,
        n as u32,
        order
            .into_iter()
            .enumerate()
            .map(|(t, l)| (l, (t as u32 * n as u32) % p)),
    )?;
    certify("thm-lim", &hegraph::gkn(2, n)?, c)
}

/// A `(2n(k+1)+1, 2n)`-total colouring of `gkn(k, n)` for `k >= 4`,
/// witnessing a circular total chromatic number of at most `k + 1 + 1/(2n)`.
/// Blocks are shifted copies of `refine(k, 2n)`, `e{i}` receives colour
/// `2i`, and the hub receives `6n` (consistent with its neighbours exactly
/// when `k >= 4`).
pub fn thm_improve(k: usize, n: usize) -> Result<CircularColouring, ConstructionError> {
    require(k >= 4, format!("thm-improve requires k >= 4, got {k}"))?;
    require(n >= 1, format!("thm-improve requires n >= 1, got {n}"))?;
    let base = refine(k, 2 * n)?;
    let hub = 6 * n as u32;
    for flipped in [true, false] {
        let blocks: Vec<(&CircularColouring, bool)> = vec![(&base, flipped); n];
        if let ChainOutcome::Valid(c) = assemble_chain(k, n, &blocks, Some(hub))? {
            return Ok(c);
        }
    }
    Err(ConstructionError::Exhausted {
        method: "thm-improve",
    })
}

/// An `(8n-3, 2n-1)`-total colouring of `gkn(3, n)`, witnessing a circular
/// total chromatic number of at most `4 + 1/(2n-1)`.
///
/// Combines one tweak-variant block (boundary `(0, 1, 2n, 4n-1)`) with
/// `n - 1` shifted refine blocks. The preferred arrangement places the
/// variant first; if the checker rejects it, a bounded exhaustive search
/// over the variant position, per-block orientations and the hub colour
/// runs, so an `Exhausted` error is a meaningful negative result rather
/// than a timeout.
pub fn thm_k3(n: usize) -> Result<CircularColouring, ConstructionError> {
    require(n >= 1, format!("thm-k3 requires n >= 1, got {n}"))?;
    let variant = k3_variant(n)?;
    let refined = refine(3, 2 * n - 1)?;

    let mut blocks: Vec<(&CircularColouring, bool)> = vec![(&variant, false)];
    blocks.extend(std::iter::repeat((&refined, true)).take(n - 1));
    if let ChainOutcome::Valid(c) = assemble_chain(3, n, &blocks, None)? {
        return Ok(c);
    }

    for variant_pos in 1..=n {
        for mask in 0u32..(1 << n) {
            let blocks: Vec<(&CircularColouring, bool)> = (1..=n)
                .map(|i| {
                    let base = if i == variant_pos { &variant } else { &refined };
                    (base, (mask >> (i - 1)) & 1 == 1)
                })
                .collect();
            if let ChainOutcome::Valid(c) = assemble_chain(3, n, &blocks, None)? {
                return Ok(c);
            }
        }
    }
    Err(ConstructionError::Exhausted { method: "thm-k3" })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::check;
    use crate::hegraph::hk;

    #[test]
    fn all0_matches_hand_evaluation_for_k2() {
        let latin = LatinSquare::constrained(2).unwrap();
        let c = all0(2, &latin).unwrap();
        assert_eq!((c.p(), c.q()), (3, 1));
        assert_eq!(c.get("x1"), Some(1));
        assert_eq!(c.get("x2"), Some(2));
        assert_eq!(c.get("x1y2"), Some(2));
        assert_eq!(c.get("x2y2"), Some(1));
        for l in ["y2", "e1", "e2"] {
            assert_eq!(c.get(l), Some(0), "{l}");
        }
    }

    #[test]
    fn all0_half_edges_all_zero() {
        for k in 2..=6 {
            let c = all0(k, &LatinSquare::back_circulant(k).unwrap()).unwrap();
            for i in 1..=k {
                assert_eq!(c.get(&format!("e{i}")), Some(0));
            }
        }
    }

    #[test]
    fn all0_rejects_order_mismatch() {
        let latin = LatinSquare::back_circulant(3).unwrap();
        assert!(matches!(
            all0(4, &latin),
            Err(ConstructionError::OrderMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn tweak_boundary_examples() {
        let c = tweak(2, 1).unwrap();
        assert_eq!((c.p(), c.q()), (4, 1));
        let b = BoundaryProfile::read(&c, "e1", "e2", "x1", "x2").unwrap();
        assert_eq!(
            b,
            BoundaryProfile {
                e: 0,
                e_prime: 1,
                x: 2,
                x_prime: 3
            }
        );

        let c = tweak(3, 2).unwrap();
        assert_eq!((c.p(), c.q()), (9, 2));
        let b = BoundaryProfile::read(&c, "e1", "e2", "x1", "x2").unwrap();
        assert_eq!(
            b,
            BoundaryProfile {
                e: 0,
                e_prime: 1,
                x: 3,
                x_prime: 7
            }
        );
    }

    #[test]
    fn refine_figure_case() {
        let c = refine(4, 4).unwrap();
        assert_eq!((c.p(), c.q()), (21, 4));
        let b = BoundaryProfile::read(&c, "e4", "e1", "x4", "x1").unwrap();
        assert_eq!(
            b,
            BoundaryProfile {
                e: 0,
                e_prime: 2,
                x: 17,
                x_prime: 6
            }
        );
    }

    #[test]
    fn scaled_all0_remains_valid() {
        let t = hk(3).unwrap().conflict_graph();
        let base = all0(3, &LatinSquare::back_circulant(3).unwrap()).unwrap();
        for n in 1..=8 {
            let scaled = base.scale(n).unwrap();
            assert_eq!((scaled.p(), scaled.q()), (4 * n + 1, n));
            assert_eq!(check(&t, &scaled).unwrap(), vec![]);
        }
    }

    #[test]
    fn thm_lim_small_cases() {
        let c = thm_lim(2, 1).unwrap();
        assert_eq!((c.p(), c.q()), (4, 1));

        // the chain assembly pins the joined edges and the hub
        for (k, n) in [(3, 1), (3, 2), (4, 3), (5, 2)] {
            let c = thm_lim(k, n).unwrap();
            assert_eq!(c.p(), (n * (k + 1) + 1) as u32);
            assert_eq!(c.q(), n as u32);
            for i in 0..=n {
                assert_eq!(c.get(&format!("e{i}")), Some(i as u32), "k={k} n={n} e{i}");
            }
            assert_eq!(c.get("u"), Some(2 * n as u32 + 1));
        }
    }

    #[test]
    fn thm_improve_small_cases() {
        let c = thm_improve(4, 1).unwrap();
        assert_eq!((c.p(), c.q()), (11, 2));
        for (k, n) in [(4, 1), (4, 2), (5, 1), (6, 2)] {
            let c = thm_improve(k, n).unwrap();
            assert_eq!(c.p(), (2 * n * (k + 1) + 1) as u32);
            for i in 0..=n {
                assert_eq!(c.get(&format!("e{i}")), Some(2 * i as u32));
            }
            assert_eq!(c.get("u"), Some(6 * n as u32));
        }
        assert!(matches!(
            thm_improve(3, 1),
            Err(ConstructionError::ParamRange(_))
        ));
    }

    #[test]
    fn thm_k3_small_cases() {
        let c = thm_k3(1).unwrap();
        assert_eq!((c.p(), c.q()), (5, 1));
        let c = thm_k3(2).unwrap();
        assert_eq!((c.p(), c.q()), (13, 3));
    }

    #[test]
    fn k3_variant_boundary() {
        for n in 1..=6 {
            let c = k3_variant(n).unwrap();
            let b = BoundaryProfile::read(&c, "e1", "e3", "x1", "x3").unwrap();
            assert_eq!(
                b,
                BoundaryProfile {
                    e: 0,
                    e_prime: 1,
                    x: 2 * n as u32,
                    x_prime: 4 * n as u32 - 1
                },
                "n={n}"
            );
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(tweak(1, 1), Err(ConstructionError::ParamRange(_))));
        assert!(matches!(tweak(3, 0), Err(ConstructionError::ParamRange(_))));
        assert!(matches!(refine(1, 1), Err(ConstructionError::ParamRange(_))));
        assert!(matches!(thm_lim(3, 0), Err(ConstructionError::ParamRange(_))));
        assert!(matches!(thm_k3(0), Err(ConstructionError::ParamRange(_))));
    }
}
