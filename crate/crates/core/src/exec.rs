//! Optional data parallelism.
//!
//! The worker count comes from `JETDIFF_WORKERS`; unset, empty or `1` means
//! everything runs sequentially on the calling thread. Results are always
//! returned in input order, so reductions do not depend on scheduling.

use rayon::prelude::*;

pub const WORKERS_ENV: &str = "JETDIFF_WORKERS";

pub fn workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(1)
}

/// Order-preserving map, parallel when more than one worker is configured.
pub fn map_ordered<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    let n = workers();
    if n <= 1 || items.len() < 2 {
        return items.into_iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
        Ok(pool) => pool.install(|| items.into_par_iter().map(f).collect()),
        Err(_) => items.into_iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u64> = (0..100).collect();
        let out = map_ordered(v, |x| x * x);
        assert_eq!(out, (0..100).map(|x| x * x).collect::<Vec<_>>());
    }
}
