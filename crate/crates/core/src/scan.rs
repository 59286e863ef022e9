//! Exhaustive scans over tuples of carrier elements.
//!
//! Large scans are split on the first coordinate and run on the current
//! rayon pool. `find_map_first` keeps the reported witness equal to the
//! lexicographically first failure whatever the schedule.

use rayon::prelude::*;

/// Below this carrier size a triple scan stays on the calling thread.
const PARALLEL_THRESHOLD: usize = 24;

/// First `(x, y, z)` in lexicographic order for which `holds` is false.
pub fn first_failing_triple<F>(n: usize, holds: F) -> Option<(usize, usize, usize)>
where
    F: Fn(usize, usize, usize) -> bool + Sync,
{
    let row = |x: usize| {
        for y in 0..n {
            for z in 0..n {
                if !holds(x, y, z) {
                    return Some((x, y, z));
                }
            }
        }
        None
    };
    if n < PARALLEL_THRESHOLD {
        (0..n).find_map(row)
    } else {
        (0..n).into_par_iter().find_map_first(row)
    }
}

/// First `(x, y)` in lexicographic order for which `holds` is false.
pub fn first_failing_pair<F>(n: usize, holds: F) -> Option<(usize, usize)>
where
    F: Fn(usize, usize) -> bool + Sync,
{
    let row = |x: usize| (0..n).find(|&y| !holds(x, y)).map(|y| (x, y));
    if n < PARALLEL_THRESHOLD * PARALLEL_THRESHOLD {
        (0..n).find_map(row)
    } else {
        (0..n).into_par_iter().find_map_first(row)
    }
}

/// First assignment of `arity` variables over `[0, n)` (odometer order,
/// last variable fastest) for which `holds` is false.
pub fn first_failing_assignment<F>(n: usize, arity: usize, holds: F) -> Option<Vec<usize>>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    if arity == 0 {
        return if holds(&[]) { None } else { Some(Vec::new()) };
    }
    let block = |first: usize| {
        let mut a = vec![0; arity];
        a[0] = first;
        loop {
            if !holds(&a) {
                return Some(a);
            }
            let mut i = arity - 1;
            loop {
                if i == 0 {
                    return None;
                }
                a[i] += 1;
                if a[i] < n {
                    break;
                }
                a[i] = 0;
                i -= 1;
            }
        }
    };
    let work = n.saturating_pow(arity as u32);
    if work < PARALLEL_THRESHOLD.pow(3) {
        (0..n).find_map(block)
    } else {
        (0..n).into_par_iter().find_map_first(block)
    }
}
