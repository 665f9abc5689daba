//! Parallel survivor search with results in enumeration order.

use gtg_core::certify::{analyze, screen, CertifyError, Survivor};
use gtg_core::trace::{Signature, Tracer};
use gtg_core::words::{enumerate_words, Word};
use rayon::prelude::*;

/// Runs `f` on a pool of `jobs` threads; 0 means one per core.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Same result as the sequential `certify::search`, screened in parallel.
pub fn par_search(k: usize, jobs: usize) -> Result<Vec<Survivor>, CertifyError> {
    let words: Vec<Word> = enumerate_words(k).collect();
    let screened = with_jobs(jobs, || {
        words
            .par_iter()
            .map_init(
                || Tracer::new(Signature::Gamma),
                |tracer, w| screen(tracer, w).map(|s| s.map(|(_, tf)| (w.clone(), tf))),
            )
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(screened
        .into_iter()
        .flatten()
        .map(|(word, tau)| {
            let verdict = analyze(&word);
            Survivor { word, tau, verdict }
        })
        .collect())
}
