//! Multi-threaded driver for the exact solver.

use std::sync::atomic::{AtomicBool, Ordering};
use std::thread;

use maxedge_core::{solve_exact_with, Decision, Graph, SolveControl, SolveError, SolveStats};

/// Splits the palette guesses over `threads` workers. The first worker to
/// find a witness stops the others; the verdict does not depend on timing,
/// the witness may.
pub fn solve_parallel(
    g: &Graph,
    k: usize,
    threads: usize,
) -> Result<(Decision, SolveStats), SolveError> {
    let shards = threads.max(1);
    if shards == 1 {
        return solve_exact_with(g, k, SolveControl::default());
    }
    let cancel = AtomicBool::new(false);
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = (0..shards)
            .map(|shard| {
                let cancel = &cancel;
                s.spawn(move || {
                    let control = SolveControl {
                        cancel: Some(cancel),
                        shard,
                        shards,
                    };
                    let out = solve_exact_with(g, k, control);
                    if matches!(out, Ok((Decision::Yes(_), _))) {
                        cancel.store(true, Ordering::Relaxed);
                    }
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver thread panicked"))
            .collect()
    });
    let mut stats = SolveStats::default();
    let mut witness = None;
    for r in results {
        let (d, st) = r?;
        stats.merge(&st);
        if let (None, Decision::Yes(w)) = (&witness, d) {
            witness = Some(w);
        }
    }
    Ok((witness.map_or(Decision::No, Decision::Yes), stats))
}
