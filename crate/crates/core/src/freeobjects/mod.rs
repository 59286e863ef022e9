//! Finite free objects of the star-side varieties and the maps that extend
//! generator assignments to homomorphisms out of them.

mod ak;
mod bx;
mod cn;
mod hom;

pub use ak::{ak_idempotents, build_ak, build_ak_capped, AkElement};
pub use bx::{build_bx, build_bx_capped, BxElement};
pub use cn::{build_cn, build_cn_capped, CnElement};
pub use hom::{hom_extension_pk, hom_extension_q1, HomExtension};

use crate::error::{Error, Result};
use crate::table::CayleyTable;
use crate::term::{check_single, Identity};

/// Default bound on the number of elements a builder may produce.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Builders re-verify their defining laws by full scan up to this size.
pub const VERIFY_LIMIT: usize = 160;

/// A built table together with the structured element behind each index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeObject<E> {
    pub table: CayleyTable,
    pub elements: Vec<E>,
}

impl<E: PartialEq> FreeObject<E> {
    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::SizeCap { size, cap });
    }
    Ok(())
}

/// Confirms each law by full scan on small outputs.
fn verify_laws(what: &str, t: &CayleyTable, laws: &[(&str, Identity)]) -> Result<()> {
    if t.n() > VERIFY_LIMIT {
        return Ok(());
    }
    if let Some(w) = t.is_associative().witness {
        return Err(Error::InternalInconsistency(format!(
            "{what} is not associative at {w:?}"
        )));
    }
    for (name, law) in laws {
        if let Some(w) = check_single(t, law).witness {
            return Err(Error::InternalInconsistency(format!(
                "{what} fails {name} at {w:?}"
            )));
        }
    }
    Ok(())
}
