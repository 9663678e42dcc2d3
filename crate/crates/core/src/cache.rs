//! Process-wide memoization of the symbolic spectral families.
//!
//! Every family function is pure, so caching by `(family, ell)` is sound;
//! the covering maps, Cohn eliminations and the verification suite all
//! re-request the same polynomials many times.

use crate::mpoly::MPoly;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum FamilyKey {
    TypeI,
    TypeII,
    TwistedI,
    TwistedII,
    ThetaTwisted,
    Full,
}

type Store = Mutex<HashMap<(FamilyKey, u32), MPoly>>;

fn store() -> &'static Store {
    static CACHE: OnceLock<Store> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn memo<F>(key: FamilyKey, ell: u32, compute: F) -> crate::Result<MPoly>
where
    F: FnOnce() -> crate::Result<MPoly>,
{
    if let Some(hit) = store().lock().unwrap().get(&(key, ell)) {
        return Ok(hit.clone());
    }
    let value = compute()?;
    store().lock().unwrap().insert((key, ell), value.clone());
    Ok(value)
}
