//! Standard-library companion to `thrallkit-core`: JSON formats, the
//! idempotent cache, the regression table of worked examples and the
//! pieces of the `thrallkit` binary that are worth testing directly.

pub mod cache;
pub mod error;
pub mod json;
pub mod paper_suite;

pub use error::{AppError, AppResult};

/// Installs the global rayon pool. Only the first call has any effect.
pub fn init_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}
