//! Execution policy for data-parallel sweeps.
//!
//! With the `parallel` feature, [`Exec::map`] fans work out over a rayon
//! pool sized by `jobs`; without it every map runs on the calling thread.
//! Results always come back in input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exec {
    jobs: usize,
}

impl Default for Exec {
    fn default() -> Self {
        Exec::serial()
    }
}

impl Exec {
    pub fn serial() -> Self {
        Exec { jobs: 1 }
    }

    /// `jobs == 0` means one worker per available core.
    pub fn parallel(jobs: usize) -> Self {
        Exec { jobs }.normalized()
    }

    fn normalized(self) -> Self {
        if self.jobs == 0 {
            let cores = std::thread::available_parallelism().map_or(1, |c| c.get());
            Exec { jobs: cores }
        } else {
            self
        }
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && self.jobs > 1
    }

    /// Applies `f` to every item, preserving order.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("thread pool");
            return pool.install(|| items.par_iter().map(&f).collect());
        }
        items.iter().map(f).collect()
    }

    /// Applies `f` to every item and hands each result to `sink` as soon as
    /// it is ready, in completion order. Serial runs complete in input order.
    pub fn for_each_unordered<T, R, F, S>(&self, items: &[T], f: F, mut sink: S)
    where
        T: Sync,
        R: Send,
        F: Fn(usize, &T) -> R + Sync + Send,
        S: FnMut(usize, R),
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            let (tx, rx) = std::sync::mpsc::channel();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("thread pool");
            std::thread::scope(|scope| {
                let f = &f;
                scope.spawn(move || {
                    pool.install(|| {
                        items
                            .par_iter()
                            .enumerate()
                            .for_each_with(tx, |tx, (i, t)| {
                                let _ = tx.send((i, f(i, t)));
                            })
                    })
                });
                for (i, r) in rx {
                    sink(i, r);
                }
            });
            return;
        }
        for (i, t) in items.iter().enumerate() {
            sink(i, f(i, t));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let xs: Vec<u64> = (0..1000).collect();
        let serial = Exec::serial().map(&xs, |x| x * x);
        let parallel = Exec::parallel(4).map(&xs, |x| x * x);
        assert_eq!(serial, parallel);
    }

    #[test]
    fn unordered_visits_everything() {
        let xs: Vec<u64> = (0..257).collect();
        let mut seen = vec![false; xs.len()];
        Exec::parallel(3).for_each_unordered(&xs, |_, x| x + 1, |i, r| {
            assert_eq!(r, xs[i] + 1);
            seen[i] = true;
        });
        assert!(seen.iter().all(|&s| s));
    }
}
