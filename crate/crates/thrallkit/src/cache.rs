//! On-disk memo of higher Lie idempotents.
//!
//! With `THRALLKIT_CACHE_DIR` set, each `E_λ` is stored as
//! `idempotent-k{k}-{parts}.json` (parts joined by `_`). Unreadable or
//! stale files are recomputed and overwritten.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use thrallkit_core::combinatorics::partitions;
use thrallkit_core::group_algebra::higher_lie_idempotents;
use thrallkit_core::{GroupAlgebraElement, Partition};

use crate::error::{AppError, AppResult};
use crate::json;

pub const CACHE_ENV: &str = "THRALLKIT_CACHE_DIR";

#[derive(Clone, Debug, Default)]
pub struct IdempotentCache {
    dir: Option<PathBuf>,
}

impl IdempotentCache {
    /// Caching is off when the variable is unset or empty.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from);
        IdempotentCache { dir }
    }

    pub fn in_dir(dir: impl Into<PathBuf>) -> Self {
        IdempotentCache { dir: Some(dir.into()) }
    }

    pub fn disabled() -> Self {
        IdempotentCache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn file_name(lambda: &Partition) -> String {
        let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
        format!("idempotent-k{}-{}.json", lambda.weight(), parts.join("_"))
    }

    fn load(&self, lambda: &Partition) -> Option<GroupAlgebraElement> {
        let path = self.dir.as_ref()?.join(Self::file_name(lambda));
        let text = fs::read_to_string(path).ok()?;
        let e = json::parse_group_algebra(&json::parse_document(&text).ok()?).ok()?;
        (e.degree() == lambda.weight()).then_some(e)
    }

    fn store(&self, lambda: &Partition, e: &GroupAlgebraElement) -> AppResult<()> {
        let Some(dir) = &self.dir else { return Ok(()) };
        fs::create_dir_all(dir).map_err(|source| AppError::Io { path: dir.display().to_string(), source })?;
        let path = dir.join(Self::file_name(lambda));
        fs::write(&path, json::render(&json::group_algebra(e)))
            .map_err(|source| AppError::Io { path: path.display().to_string(), source })
    }

    /// All `E_λ` for `λ ⊢ k`.
    pub fn idempotents(&self, k: usize) -> AppResult<BTreeMap<Partition, GroupAlgebraElement>> {
        if self.dir.is_some() {
            let cached: Option<BTreeMap<_, _>> =
                partitions(k).into_iter().map(|l| self.load(&l).map(|e| (l, e))).collect();
            if let Some(all) = cached {
                return Ok(all);
            }
        }
        let all = higher_lie_idempotents(k)?;
        for (lambda, e) in &all {
            self.store(lambda, e)?;
        }
        Ok(all)
    }

    pub fn idempotent(&self, lambda: &Partition) -> AppResult<GroupAlgebraElement> {
        if let Some(e) = self.load(lambda) {
            return Ok(e);
        }
        let mut all = self.idempotents(lambda.weight())?;
        Ok(all.remove(lambda).expect("every partition of k has an idempotent"))
    }
}
