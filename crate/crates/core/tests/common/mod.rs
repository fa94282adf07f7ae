//! Shared test oracles, kept independent of the solver implementation.
#![allow(dead_code)] // each test binary uses its own subset

use circtotal::hegraph::TotalConflictGraph;

/// Exhaustive check by plain depth-first enumeration over all colour
/// assignments in element order, testing each candidate colour against the
/// already-assigned neighbours directly. No domains, no propagation, no
/// variable ordering, no symmetry breaking: an independent path to the same
/// answer as the solver.
pub fn brute_force_feasible(t: &TotalConflictGraph, p: u32, q: u32) -> bool {
    let mut colours = vec![0u32; t.len()];
    brute(t, p, q, 0, &mut colours, &mut 0, true)
}

/// Number of valid colourings, by the same exhaustive enumeration.
pub fn brute_force_count(t: &TotalConflictGraph, p: u32, q: u32) -> u64 {
    let mut colours = vec![0u32; t.len()];
    let mut count = 0;
    brute(t, p, q, 0, &mut colours, &mut count, false);
    count
}

fn brute(
    t: &TotalConflictGraph,
    p: u32,
    q: u32,
    idx: usize,
    colours: &mut [u32],
    count: &mut u64,
    stop_at_first: bool,
) -> bool {
    if idx == t.len() {
        *count += 1;
        return true;
    }
    'colour: for c in 0..p {
        for &nb in t.neighbors(idx) {
            if (nb as usize) < idx {
                let d = c.abs_diff(colours[nb as usize]);
                if d < q || d > p - q {
                    continue 'colour;
                }
            }
        }
        colours[idx] = c;
        if brute(t, p, q, idx + 1, colours, count, stop_at_first) && stop_at_first {
            return true;
        }
    }
    false
}
