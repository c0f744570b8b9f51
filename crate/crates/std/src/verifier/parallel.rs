use std::ops::Range;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "TREBLY_JOBS";

/// Workers to use when none are requested: `TREBLY_JOBS`, else 1.
pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&j| j >= 1)
        .unwrap_or(1)
}

/// Splits `0..total` into contiguous chunks, runs `work` on each with up to
/// `jobs` threads, and returns the results in chunk order.
pub fn map_chunks<T, F>(total: u64, jobs: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync,
{
    let chunks = if jobs <= 1 {
        1
    } else {
        (jobs as u64 * 16).min(total.max(1))
    };
    let bounds: Vec<Range<u64>> = (0..chunks)
        .map(|i| total * i / chunks..total * (i + 1) / chunks)
        .collect();
    if jobs <= 1 {
        return bounds.into_iter().map(&work).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..bounds.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(r) = bounds.get(i) else { break };
                let out = work(r.clone());
                slots.lock().expect("no worker panicked")[i] = Some(out);
            });
        }
    });
    slots
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|s| s.expect("every chunk ran"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_the_range_in_order() {
        for jobs in [1, 2, 3, 8] {
            let parts = map_chunks(1000, jobs, |r| r.collect::<Vec<_>>());
            let flat: Vec<u64> = parts.into_iter().flatten().collect();
            assert_eq!(flat, (0..1000).collect::<Vec<_>>());
        }
        assert_eq!(map_chunks(0, 4, |r| r.count()), [0]);
    }
}
