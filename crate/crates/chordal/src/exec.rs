//! Work distribution for suites that process many independent instances.

/// Applies `f` to every item and returns the results in input order.
///
/// `jobs = 1` runs sequentially on the calling thread, `jobs = 0` uses the
/// global thread pool, any other value uses a dedicated pool of that many
/// threads. Results are identical across all modes; only wall time differs.
#[cfg(feature = "parallel")]
pub fn map_items<T, U, F>(jobs: usize, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    use rayon::prelude::*;
    match jobs {
        1 => items.into_iter().map(f).collect(),
        0 => items.into_par_iter().map(f).collect(),
        k => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("failed to build worker pool")
            .install(|| items.into_par_iter().map(f).collect()),
    }
}

/// Sequential fallback used when the `parallel` feature is disabled; the
/// `jobs` argument is accepted for interface compatibility and ignored.
#[cfg(not(feature = "parallel"))]
pub fn map_items<T, U, F>(jobs: usize, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    let _ = jobs;
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_input_order() {
        let items: Vec<u64> = (0..500).collect();
        let doubled = map_items(0, items.clone(), |x| x * 2);
        assert_eq!(doubled, items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn all_job_settings_agree() {
        let items: Vec<u64> = (0..100).collect();
        let seq = map_items(1, items.clone(), |x| x * x);
        let par = map_items(0, items.clone(), |x| x * x);
        let four = map_items(4, items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq, four);
    }
}
