//! Exact decision procedure for `(p,q)`-total colourability, exhaustive
//! colouring enumeration, and computation of circular total chromatic
//! numbers by feasibility search over bounded-denominator candidates.
//!
//! The feasibility search is a complete backtracking search on the conflict
//! graph. Domains are bitmasks for `p <= 64` and unions of colour intervals
//! beyond that. Propagation is circular bounds consistency run to a
//! fixpoint: assigning colour `a` to an element removes the open arc
//! `(a-q, a+q) mod p` from every neighbour's domain, and more generally any
//! domain whose circular hull is narrower than that arc removes from its
//! neighbours every colour whose support would fall entirely inside it;
//! domains reduced to a single colour are assigned in turn. The decision
//! variable is the unassigned element with the smallest domain, ties broken
//! by conflict degree and then element order; values are tried in ascending
//! order. With symmetry breaking on, one element of maximum conflict degree
//! is pinned to colour 0 first, which is sound because validity is
//! invariant under shifting all colours.
//!
//! `infeasible` is only ever reported after the search space is exhausted;
//! a timeout is reported as such and never turned into an answer. Identical
//! inputs and configuration produce identical outcomes and node counts.

mod domain;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::colouring::{self, CircularColouring};
use crate::fraction::{gcd, Fraction};
use crate::hegraph::{self, ElementKind, HalfEdgeGraph, TotalConflictGraph};

use domain::Domain;

/// Elements above this count require an explicit override to enumerate.
pub const ENUMERATION_GUARD: usize = 20;

#[derive(Error, Debug)]
pub enum SolverError {
    #[error(
        "instance has {elements} elements, above the enumeration guard of {limit} (pass allow_large to override)"
    )]
    GuardViolation { elements: usize, limit: usize },
    #[error("exhaustive half-edge verification is limited to 2 <= k <= 4, got {0}")]
    VerifyRange(usize),
    #[error("empty candidate range ({lower}, {upper}]")]
    EmptyRange { lower: Fraction, upper: Fraction },
    #[error("denominator bound must be at least 1")]
    ZeroDenominatorBound,
    #[error("feasibility of ({p},{q}) timed out; type classification is indeterminate")]
    Indeterminate { p: u32, q: u32 },
}

/// Knobs for the feasibility search and for `chi_total`.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Wall-clock budget per feasibility call.
    pub time_budget: Duration,
    /// Denominator bound override for `chi_total`; the default is the
    /// number of elements of the conflict graph.
    pub qmax: Option<usize>,
    /// Pin one maximum-degree element to colour 0.
    pub symmetry_breaking: bool,
    /// Consumed by the randomized property tests; the search itself is
    /// deterministic and never reads it.
    pub deterministic_seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            time_budget: Duration::from_secs(900),
            qmax: None,
            symmetry_breaking: true,
            deterministic_seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug)]
pub enum FeasibilityStatus {
    /// A `(p,q)`-total colouring exists; the certificate has passed the
    /// checker.
    Feasible(CircularColouring),
    /// The search space was exhausted without a colouring.
    Infeasible,
    /// The time budget ran out before the search completed.
    Timeout,
}

#[derive(Clone, Debug)]
pub struct FeasibilityOutcome {
    pub status: FeasibilityStatus,
    pub nodes_explored: u64,
}

impl FeasibilityOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self.status, FeasibilityStatus::Feasible(_))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self.status, FeasibilityStatus::Infeasible)
    }
}

enum DfsResult {
    Found,
    Exhausted,
    TimedOut,
}

struct Search<'a> {
    t: &'a TotalConflictGraph,
    p: u32,
    q: u32,
    domains: Vec<Domain>,
    colour: Vec<u32>,
    assigned: Vec<bool>,
    unassigned: usize,
    dom_trail: Vec<(u32, Domain)>,
    asg_trail: Vec<u32>,
    saved_at: Vec<u64>,
    serial: u64,
    dirty: std::collections::VecDeque<u32>,
    in_queue: Vec<bool>,
    nodes: u64,
    deadline: Option<Instant>,
    next_time_check: u64,
}

impl<'a> Search<'a> {
    fn new(t: &'a TotalConflictGraph, p: u32, q: u32, budget: Duration) -> Self {
        let n = t.len();
        Search {
            t,
            p,
            q,
            domains: vec![Domain::full(p); n],
            colour: vec![0; n],
            assigned: vec![false; n],
            unassigned: n,
            dom_trail: Vec::new(),
            asg_trail: Vec::new(),
            saved_at: vec![u64::MAX; n],
            serial: 0,
            dirty: std::collections::VecDeque::new(),
            in_queue: vec![false; n],
            nodes: 0,
            deadline: Instant::now().checked_add(budget),
            next_time_check: 1024,
        }
    }

    fn mark_assigned(&mut self, var: u32, c: u32) {
        debug_assert!(!self.assigned[var as usize]);
        self.colour[var as usize] = c;
        self.assigned[var as usize] = true;
        self.unassigned -= 1;
        self.asg_trail.push(var);
    }

    fn save_domain(&mut self, var: u32) {
        if self.saved_at[var as usize] != self.serial {
            self.dom_trail.push((var, self.domains[var as usize].clone()));
            self.saved_at[var as usize] = self.serial;
        }
    }

    fn enqueue(&mut self, var: u32) {
        if !self.in_queue[var as usize] {
            self.in_queue[var as usize] = true;
            self.dirty.push_back(var);
        }
    }

    /// Pins `var` to `c` and propagates to a fixpoint.
    fn decide(&mut self, var: u32, c: u32) -> bool {
        self.save_domain(var);
        self.domains[var as usize].retain_single(c);
        self.mark_assigned(var, c);
        self.enqueue(var);
        self.propagate()
    }

    /// Bounds propagation on the circular distance constraint: whenever the
    /// circular hull of an element's domain is narrower than the forbidden
    /// arc (width `2q-1`), every neighbour loses the arc of colours whose
    /// whole support would fall inside it. A singleton domain propagates
    /// exactly the forward-checking arc `(c-q, c+q)`; narrowed domains
    /// propagate earlier. Domains reduced to one colour are assigned in
    /// turn until nothing changes.
    fn propagate(&mut self) -> bool {
        let t = self.t;
        let (p, q) = (self.p, self.q);
        while let Some(x) = self.dirty.pop_front() {
            self.in_queue[x as usize] = false;
            let (start, width) = self.domains[x as usize].circular_hull(p);
            if width >= 2 * q {
                continue;
            }
            // colours with every support inside the open arc around them
            let lo = (start + width + p - q) % p;
            let hi = (start + q - 1) % p;
            for &z in t.neighbors(x as usize) {
                self.save_domain(z);
                if !self.domains[z as usize].remove_arc(lo, hi, p) {
                    continue;
                }
                let dom = &self.domains[z as usize];
                if dom.is_empty() {
                    return false;
                }
                if !self.assigned[z as usize] {
                    if let Some(c) = dom.min().filter(|_| dom.size() == 1) {
                        self.mark_assigned(z, c);
                    }
                }
                self.enqueue(z);
            }
        }
        true
    }

    fn undo(&mut self, dom_mark: usize, asg_mark: usize) {
        while self.dom_trail.len() > dom_mark {
            let (var, dom) = self.dom_trail.pop().expect("marked");
            self.domains[var as usize] = dom;
        }
        while self.asg_trail.len() > asg_mark {
            let var = self.asg_trail.pop().expect("marked");
            self.assigned[var as usize] = false;
            self.unassigned += 1;
        }
        for x in self.dirty.drain(..) {
            self.in_queue[x as usize] = false;
        }
    }

    fn select_var(&self) -> u32 {
        let mut best: Option<(u32, usize, u32)> = None;
        for v in 0..self.t.len() {
            if self.assigned[v] {
                continue;
            }
            let size = self.domains[v].size();
            let deg = self.t.degree(v);
            let better = match best {
                None => true,
                Some((bs, bd, _)) => size < bs || (size == bs && deg > bd),
            };
            if better {
                best = Some((size, deg, v as u32));
            }
        }
        best.expect("called with unassigned elements").2
    }

    /// Narrows `var` to the given sub-domain and propagates; marks the
    /// element assigned when a single colour remains.
    fn narrow(&mut self, var: u32, dom: Domain) -> bool {
        self.save_domain(var);
        if let Some(c) = dom.min().filter(|_| dom.size() == 1) {
            self.mark_assigned(var, c);
        }
        self.domains[var as usize] = dom;
        self.enqueue(var);
        self.propagate()
    }

    fn dfs(&mut self) -> DfsResult {
        if self.unassigned == 0 {
            return DfsResult::Found;
        }
        if let Some(deadline) = self.deadline {
            if self.nodes >= self.next_time_check {
                self.next_time_check = self.nodes + 1024;
                if Instant::now() >= deadline {
                    return DfsResult::TimedOut;
                }
            }
        }
        let var = self.select_var();
        let snapshot = self.domains[var as usize].clone();

        // small domains: enumerate values in ascending order
        if snapshot.size() <= SPLIT_THRESHOLD {
            for c in snapshot.iter() {
                self.nodes += 1;
                self.serial += 1;
                let dom_mark = self.dom_trail.len();
                let asg_mark = self.asg_trail.len();
                if self.decide(var, c) {
                    match self.dfs() {
                        DfsResult::Found => return DfsResult::Found,
                        DfsResult::TimedOut => return DfsResult::TimedOut,
                        DfsResult::Exhausted => {}
                    }
                }
                self.undo(dom_mark, asg_mark);
            }
            return DfsResult::Exhausted;
        }

        // wide domains: bisect along the circular hull so that bounds
        // propagation prunes whole colour ranges high in the tree
        let (start, width) = snapshot.circular_hull(self.p);
        let half = width / 2;
        let cut = (start + half - 1) % self.p; // end of the lower half-arc
        for part in 0..2 {
            self.nodes += 1;
            self.serial += 1;
            let dom_mark = self.dom_trail.len();
            let asg_mark = self.asg_trail.len();
            let mut dom = snapshot.clone();
            if part == 0 {
                dom.remove_arc((cut + 1) % self.p, (start + width - 1) % self.p, self.p);
            } else {
                dom.remove_arc(start, cut, self.p);
            }
            debug_assert!(!dom.is_empty());
            if self.narrow(var, dom) {
                match self.dfs() {
                    DfsResult::Found => return DfsResult::Found,
                    DfsResult::TimedOut => return DfsResult::TimedOut,
                    DfsResult::Exhausted => {}
                }
            }
            self.undo(dom_mark, asg_mark);
        }
        DfsResult::Exhausted
    }
}

/// Domains at most this large are enumerated value by value; wider domains
/// are bisected.
const SPLIT_THRESHOLD: u32 = 2;

/// Decides whether `t` admits a `(p,q)`-total colouring. Complete: an
/// `Infeasible` outcome means the whole space was exhausted. `p` and `q`
/// are reduced internally; the certificate is expressed in the original
/// `(p,q)` by scaling the reduced colours back up.
pub fn feasible(
    t: &TotalConflictGraph,
    p: u32,
    q: u32,
    cfg: &SearchConfig,
) -> FeasibilityOutcome {
    assert!(p >= 1 && q >= 1, "feasible requires p >= 1 and q >= 1");
    let g = gcd(p as u64, q as u64) as u32;
    let (pr, qr) = (p / g, q / g);

    let certified = |c: CircularColouring, nodes: u64| {
        let violations = colouring::check(t, &c).expect("certificate is total and in range");
        assert!(
            violations.is_empty(),
            "solver produced an invalid certificate: {}",
            violations[0]
        );
        FeasibilityOutcome {
            status: FeasibilityStatus::Feasible(c),
            nodes_explored: nodes,
        }
    };

    if pr < 2 * qr {
        // no adjacent pair can be coloured at all
        if t.pairs().is_empty() {
            let c = CircularColouring::with_assignment(
                p,
                q,
                t.labels().map(|l| (l.to_string(), 0)),
            )
            .expect("all-zero assignment is in range");
            return certified(c, 0);
        }
        return FeasibilityOutcome {
            status: FeasibilityStatus::Infeasible,
            nodes_explored: 0,
        };
    }

    let mut search = Search::new(t, pr, qr, cfg.time_budget);
    if cfg.symmetry_breaking {
        if let Some(pin) = t.max_degree_element() {
            if !search.decide(pin as u32, 0) {
                return FeasibilityOutcome {
                    status: FeasibilityStatus::Infeasible,
                    nodes_explored: 0,
                };
            }
        }
    }
    let result = search.dfs();
    let nodes = search.nodes;
    match result {
        DfsResult::Found => {
            let c = CircularColouring::with_assignment(
                p,
                q,
                t.labels()
                    .enumerate()
                    .map(|(i, l)| (l.to_string(), search.colour[i] * g)),
            )
            .expect("search colours are in range");
            certified(c, nodes)
        }
        DfsResult::Exhausted => FeasibilityOutcome {
            status: FeasibilityStatus::Infeasible,
            nodes_explored: nodes,
        },
        DfsResult::TimedOut => FeasibilityOutcome {
            status: FeasibilityStatus::Timeout,
            nodes_explored: nodes,
        },
    }
}

struct Enumerator<'a, 'v> {
    t: &'a TotalConflictGraph,
    p: u32,
    q: u32,
    colours: Vec<u32>,
    count: u64,
    halted: bool,
    visitor: &'v mut dyn FnMut(&[u32]) -> bool,
}

impl Enumerator<'_, '_> {
    fn admissible(&self, idx: usize, c: u32) -> bool {
        self.t.neighbors(idx).iter().all(|&nb| {
            if (nb as usize) >= idx {
                return true;
            }
            let d = c.abs_diff(self.colours[nb as usize]);
            d >= self.q && d <= self.p - self.q
        })
    }

    fn run(&mut self, idx: usize) {
        if self.halted {
            return;
        }
        if idx == self.t.len() {
            self.count += 1;
            if !(self.visitor)(&self.colours) {
                self.halted = true;
            }
            return;
        }
        for c in 0..self.p {
            if self.admissible(idx, c) {
                self.colours[idx] = c;
                self.run(idx + 1);
                if self.halted {
                    return;
                }
            }
        }
    }
}

/// Visits every valid `(p,q)`-colouring of `t` exactly once, in
/// lexicographic order of the colour vector over the label-sorted elements.
/// No symmetry breaking is applied. The visitor returns `false` to stop
/// early; the returned count is the number of colourings visited.
///
/// Guarded to at most [`ENUMERATION_GUARD`] elements unless `allow_large`.
pub fn enumerate_all(
    t: &TotalConflictGraph,
    p: u32,
    q: u32,
    allow_large: bool,
    visitor: &mut dyn FnMut(&[u32]) -> bool,
) -> Result<u64, SolverError> {
    if t.len() > ENUMERATION_GUARD && !allow_large {
        return Err(SolverError::GuardViolation {
            elements: t.len(),
            limit: ENUMERATION_GUARD,
        });
    }
    assert!(p >= 1 && q >= 1, "enumerate_all requires p >= 1 and q >= 1");
    let mut e = Enumerator {
        t,
        p,
        q,
        colours: vec![0; t.len()],
        count: 0,
        halted: false,
        visitor,
    };
    e.run(0);
    Ok(e.count)
}

/// Result of checking that all half-edges are equally coloured in every
/// valid colouring.
#[derive(Clone, Debug)]
pub struct UniformityReport {
    pub uniform: bool,
    /// First enumerated colouring with two differently coloured half-edges.
    pub counterexample: Option<CircularColouring>,
    pub colourings_visited: u64,
}

/// Enumerates every `(p,q)`-total colouring of `g` and reports whether all
/// half-edges receive one common colour in each of them, stopping at the
/// first counterexample.
pub fn half_edges_uniform(
    g: &HalfEdgeGraph,
    p: u32,
    q: u32,
    allow_large: bool,
) -> Result<UniformityReport, SolverError> {
    let t = g.conflict_graph();
    let half_ids: Vec<usize> = (0..t.len())
        .filter(|&i| t.kind(i) == ElementKind::HalfEdge)
        .collect();
    let mut counterexample: Option<CircularColouring> = None;
    let count = {
        let mut visitor = |colours: &[u32]| {
            let Some(&h0) = half_ids.first() else {
                return true;
            };
            let first = colours[h0];
            if half_ids.iter().any(|&h| colours[h] != first) {
                let c = CircularColouring::with_assignment(
                    p,
                    q,
                    t.labels()
                        .enumerate()
                        .map(|(i, l)| (l.to_string(), colours[i])),
                )
                .expect("enumerated colours are in range");
                counterexample = Some(c);
                return false;
            }
            true
        };
        enumerate_all(&t, p, q, allow_large, &mut visitor)?
    };
    Ok(UniformityReport {
        uniform: counterexample.is_none(),
        counterexample,
        colourings_visited: count,
    })
}

/// Checks that in every `(k+1)`-total colouring of `hk(k)` all half-edges
/// receive the same colour, by exhaustive enumeration. Guarded to
/// `2 <= k <= 4`.
pub fn verify_half_edge_uniform(k: usize) -> Result<UniformityReport, SolverError> {
    if !(2..=4).contains(&k) {
        return Err(SolverError::VerifyRange(k));
    }
    let g = hegraph::hk(k).expect("k >= 2");
    half_edges_uniform(&g, k as u32 + 1, 1, true)
}

/// All reduced fractions `p/q` with `q <= qmax` in the interval
/// `(lower, upper]`, in ascending order.
pub fn candidate_fractions(
    lower: Fraction,
    upper: Fraction,
    qmax: usize,
) -> Result<Vec<Fraction>, SolverError> {
    candidate_fractions_bounded(lower, upper, qmax, None)
}

/// `candidate_fractions` with an optional bound on the numerator as well.
fn candidate_fractions_bounded(
    lower: Fraction,
    upper: Fraction,
    qmax: usize,
    pmax: Option<u64>,
) -> Result<Vec<Fraction>, SolverError> {
    if qmax < 1 {
        return Err(SolverError::ZeroDenominatorBound);
    }
    if lower >= upper {
        return Err(SolverError::EmptyRange { lower, upper });
    }
    let mut out = Vec::new();
    for den in 1..=qmax as u64 {
        let lo = (lower.numerator() as u128 * den as u128 / lower.denominator() as u128) as u64 + 1;
        let mut hi = (upper.numerator() as u128 * den as u128 / upper.denominator() as u128) as u64;
        if let Some(pmax) = pmax {
            hi = hi.min(pmax);
        }
        for num in lo..=hi {
            if gcd(num, den) == 1 {
                out.push(Fraction::new(num, den));
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiStatus {
    Exact(Fraction),
    /// `lower <= chi''_c <= upper` is everything established within budget;
    /// `upper` is `None` when no feasible value was proven yet.
    Bounded {
        lower: Fraction,
        upper: Option<Fraction>,
    },
}

#[derive(Clone, Debug)]
pub struct ChiResult {
    pub status: ChiStatus,
    pub denominator_bound_used: usize,
    /// Certificate at the exact value, or at the bounded upper value.
    pub witness: Option<CircularColouring>,
    pub nodes_total: u64,
    pub feasibility_calls: u32,
}

/// Computes the circular total chromatic number of `g` exactly, as the
/// least feasible reduced fraction over the candidate bound.
///
/// The lower bound starts at `max_degree + 1` (half-edges included), which
/// is forced by the clique an element of maximum degree spans in the
/// conflict graph. The upper bound is the first feasible integer at or
/// above it. Between the two, feasibility is monotone in `p/q`, so a
/// bisection over the candidate fractions pins the least feasible one;
/// `Exact` is only reported when both the feasibility call at the answer
/// and the infeasibility call at its predecessor candidate completed.
/// Under the default denominator bound (the element count) the candidates
/// are additionally numerator-bounded by the element count, which is sound
/// by the attainment theorem for circular colourings of finite graphs.
/// A timeout degrades the result to an honest `Bounded` interval.
pub fn chi_total(g: &HalfEdgeGraph, cfg: &SearchConfig) -> ChiResult {
    let t = g.conflict_graph();
    let delta = g.degree_report().max_degree_with_half_edges;
    let qmax = cfg.qmax.unwrap_or_else(|| t.len().max(1));
    let mut nodes_total = 0u64;
    let mut calls = 0u32;
    let run = |p: u32, q: u32, nodes_total: &mut u64, calls: &mut u32| {
        let out = feasible(&t, p, q, cfg);
        *nodes_total += out.nodes_explored;
        *calls += 1;
        out
    };

    let lower_int = delta as u32 + 1;
    let mut upper_int = lower_int;
    let mut witness: Option<CircularColouring> = loop {
        match run(upper_int, 1, &mut nodes_total, &mut calls).status {
            FeasibilityStatus::Feasible(c) => break Some(c),
            FeasibilityStatus::Infeasible => {
                // the total colouring conjecture says delta+2 suffices; the
                // cap only guards against a runaway loop on hostile input
                if upper_int >= lower_int + 16 {
                    return ChiResult {
                        status: ChiStatus::Bounded {
                            lower: Fraction::integer(upper_int as u64),
                            upper: None,
                        },
                        denominator_bound_used: qmax,
                        witness: None,
                        nodes_total,
                        feasibility_calls: calls,
                    };
                }
                upper_int += 1;
            }
            FeasibilityStatus::Timeout => {
                // best established lower bound: the clique bound, or the
                // largest integer already proven infeasible
                let lower = Fraction::integer((upper_int - 1).max(lower_int) as u64);
                return ChiResult {
                    status: ChiStatus::Bounded { lower, upper: None },
                    denominator_bound_used: qmax,
                    witness: None,
                    nodes_total,
                    feasibility_calls: calls,
                };
            }
        }
    };

    if upper_int == lower_int {
        // feasible exactly at the clique lower bound; nothing below it is
        // a candidate
        return ChiResult {
            status: ChiStatus::Exact(Fraction::integer(lower_int as u64)),
            denominator_bound_used: qmax,
            witness,
            nodes_total,
            feasibility_calls: calls,
        };
    }

    let lo_val = Fraction::integer((upper_int - 1) as u64); // proven infeasible
    let up_val = Fraction::integer(upper_int as u64); // proven feasible

    // Attainment bound: the exact value is a reduced fraction whose
    // numerator is at most the number of elements (in an optimal colouring
    // a minimal tight closed walk has length exactly p and visits distinct
    // elements). With the default denominator bound the bisection therefore
    // runs over numerator-bounded candidates only; the minimum feasible one
    // is the exact value, and infeasibility of every skipped fraction below
    // it follows from exactness. A user denominator bound below the element
    // count instead keeps the full `q <= qmax` candidate set, and the
    // result is exact within that bound.
    let pmax = (qmax >= t.len()).then(|| (t.len() as u64).max(upper_int as u64));
    let candidates = candidate_fractions_bounded(lo_val, up_val, qmax, pmax)
        .expect("upper bound is in the range");
    debug_assert_eq!(*candidates.last().expect("nonempty"), up_val);

    let mut lo: isize = -1; // index of largest proven-infeasible candidate
    let mut hi: isize = candidates.len() as isize - 1; // proven feasible
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let f = candidates[mid as usize];
        let p = u32::try_from(f.numerator()).expect("candidate numerator fits");
        let q = u32::try_from(f.denominator()).expect("candidate denominator fits");
        match run(p, q, &mut nodes_total, &mut calls).status {
            FeasibilityStatus::Feasible(c) => {
                witness = Some(c);
                hi = mid;
            }
            FeasibilityStatus::Infeasible => lo = mid,
            FeasibilityStatus::Timeout => {
                let lower = if lo >= 0 { candidates[lo as usize] } else { lo_val };
                return ChiResult {
                    status: ChiStatus::Bounded {
                        lower,
                        upper: Some(candidates[hi as usize]),
                    },
                    denominator_bound_used: qmax,
                    witness,
                    nodes_total,
                    feasibility_calls: calls,
                };
            }
        }
    }

    ChiResult {
        status: ChiStatus::Exact(candidates[hi as usize]),
        denominator_bound_used: qmax,
        witness,
        nodes_total,
        feasibility_calls: calls,
    }
}

/// True iff `g` admits no `(max_degree + 1)`-total colouring, half-edges
/// counted. A timeout propagates as an error rather than a guess.
pub fn is_type2(g: &HalfEdgeGraph, cfg: &SearchConfig) -> Result<bool, SolverError> {
    let t = g.conflict_graph();
    let delta = g.degree_report().max_degree_with_half_edges as u32;
    match feasible(&t, delta + 1, 1, cfg).status {
        FeasibilityStatus::Feasible(_) => Ok(false),
        FeasibilityStatus::Infeasible => Ok(true),
        FeasibilityStatus::Timeout => Err(SolverError::Indeterminate { p: delta + 1, q: 1 }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hegraph::HalfEdgeGraph;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    fn single_edge() -> TotalConflictGraph {
        HalfEdgeGraph::new(
            ["u".into(), "v".into()],
            [("uv".into(), "u".into(), "v".into())],
            [],
        )
        .unwrap()
        .conflict_graph()
    }

    #[test]
    fn single_edge_feasibility() {
        let t = single_edge();
        assert!(feasible(&t, 3, 1, &cfg()).is_feasible());
        assert!(feasible(&t, 2, 1, &cfg()).is_infeasible());
    }

    #[test]
    fn p_below_2q_is_immediately_infeasible() {
        let t = single_edge();
        let out = feasible(&t, 3, 2, &cfg());
        assert!(out.is_infeasible());
        assert_eq!(out.nodes_explored, 0);
    }

    #[test]
    fn pairless_graph_is_trivially_feasible() {
        let g = HalfEdgeGraph::new(["a".into(), "b".into()], [], []).unwrap();
        let out = feasible(&g.conflict_graph(), 1, 1, &cfg());
        assert!(out.is_feasible());
    }

    #[test]
    fn c7_total_graph_thresholds() {
        let t = hegraph::cycle(7).unwrap().conflict_graph();
        assert!(feasible(&t, 7, 2, &cfg()).is_feasible());
        assert!(feasible(&t, 10, 3, &cfg()).is_infeasible());
    }

    #[test]
    fn gkn31_has_no_4_total_colouring() {
        let t = hegraph::gkn(3, 1).unwrap().conflict_graph();
        assert!(feasible(&t, 4, 1, &cfg()).is_infeasible());
    }

    #[test]
    fn non_reduced_parameters_scale_certificates_back() {
        let t = single_edge();
        let out = feasible(&t, 6, 2, &cfg());
        let FeasibilityStatus::Feasible(c) = out.status else {
            panic!("(6,2) reduces to (3,1), which is feasible");
        };
        assert_eq!((c.p(), c.q()), (6, 2));
    }

    #[test]
    fn determinism_of_outcomes_and_node_counts() {
        let t = hegraph::cycle(7).unwrap().conflict_graph();
        let a = feasible(&t, 10, 3, &cfg());
        let b = feasible(&t, 10, 3, &cfg());
        assert!(a.is_infeasible() && b.is_infeasible());
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }

    #[test]
    fn enumerate_single_edge() {
        let t = single_edge();
        let count = enumerate_all(&t, 3, 1, false, &mut |_| true).unwrap();
        assert_eq!(count, 6);
    }

    #[test]
    fn enumeration_guard_fires() {
        let t = hegraph::gkn(3, 2).unwrap().conflict_graph();
        assert!(matches!(
            enumerate_all(&t, 4, 1, false, &mut |_| true),
            Err(SolverError::GuardViolation { elements: 26, .. })
        ));
    }

    #[test]
    fn half_edges_uniform_smallest_case() {
        let g = hegraph::hk(2).unwrap();
        let report = half_edges_uniform(&g, 3, 1, false).unwrap();
        assert!(report.uniform);
        assert_eq!(report.colourings_visited, 6);
    }

    #[test]
    fn verify_range_guard() {
        assert!(matches!(
            verify_half_edge_uniform(5),
            Err(SolverError::VerifyRange(5))
        ));
    }

    #[test]
    fn candidate_fraction_examples() {
        let list = candidate_fractions(Fraction::integer(4), Fraction::new(9, 2), 3).unwrap();
        assert_eq!(list, vec![Fraction::new(13, 3), Fraction::new(9, 2)]);

        let list = candidate_fractions(Fraction::integer(3), Fraction::integer(4), 2).unwrap();
        assert_eq!(list, vec![Fraction::new(7, 2), Fraction::integer(4)]);

        let list = candidate_fractions(Fraction::integer(4), Fraction::integer(5), 1).unwrap();
        assert_eq!(list, vec![Fraction::integer(5)]);

        assert!(matches!(
            candidate_fractions(Fraction::integer(4), Fraction::integer(4), 3),
            Err(SolverError::EmptyRange { .. })
        ));
    }

    #[test]
    fn type_classification() {
        assert!(is_type2(&hegraph::gkn(2, 1).unwrap(), &cfg()).unwrap());
        assert!(!is_type2(&hegraph::hk(3).unwrap(), &cfg()).unwrap());
        assert!(is_type2(&hegraph::gkn(4, 1).unwrap(), &cfg()).unwrap());
    }

    #[test]
    fn chi_of_single_vertex_is_one() {
        let g = HalfEdgeGraph::new(["v".into()], [], []).unwrap();
        let r = chi_total(&g, &cfg());
        assert_eq!(r.status, ChiStatus::Exact(Fraction::integer(1)));
    }

    #[test]
    fn chi_of_c6_is_three() {
        let g = hegraph::cycle(6).unwrap();
        let r = chi_total(&g, &cfg());
        assert_eq!(r.status, ChiStatus::Exact(Fraction::integer(3)));
        assert!(r.witness.is_some());
    }
}
