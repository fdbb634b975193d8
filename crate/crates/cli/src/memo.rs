use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use encone_core::shoji::KostkaTable;
use encone_core::Result;

/// Solved tables keyed by `n`, so a run solves each size at most once.
#[derive(Debug, Default)]
pub struct TableCache {
    tables: Mutex<BTreeMap<usize, Arc<KostkaTable>>>,
}

impl TableCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize) -> Result<Arc<KostkaTable>> {
        let mut tables = self.tables.lock().expect("table cache poisoned");
        if let Some(t) = tables.get(&n) {
            return Ok(Arc::clone(t));
        }
        let t = Arc::new(KostkaTable::solve(n)?);
        tables.insert(n, Arc::clone(&t));
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.tables.lock().expect("table cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
