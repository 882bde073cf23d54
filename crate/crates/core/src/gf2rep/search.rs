//! The subgroup survey: which conjugacy classes of subgroups of S6 admit a
//! four-dimensional absolutely irreducible module over GF(2)?
//!
//! Absolutely irreducible dimensions are read off from the regular module:
//! every GF(2)-irreducible of a finite group occurs in its regular module,
//! and a GF(2)-irreducible of dimension D with endomorphism field GF(2^e)
//! splits over the extension into e Galois-conjugate absolutely irreducible
//! modules of dimension D/e.  No extension-field linear algebra is needed.

use serde::{Deserialize, Serialize};

use crate::groups::{subgroup_classes, PermGroup};

use super::meataxe::chop;
use super::module::GF2Module;
use super::GF2RepError;

/// Absolutely irreducible dimension data for a small group: one pair
/// `(dimension over the splitting field, endomorphism field degree e)` per
/// absolutely irreducible module, sorted ascending.
///
/// A GF(2)-irreducible of dimension D with endomorphism field of degree e
/// contributes e pairs `(D/e, e)` — its Galois-conjugate constituents over
/// GF(2^e).  The number of pairs always equals the number of 2-regular
/// conjugacy classes of the group.
pub fn abs_irred_dims(group: &PermGroup, seed: u64) -> Result<Vec<(u32, u32)>, GF2RepError> {
    let regular = GF2Module::regular_module(group)?;
    let factors = chop(&regular, seed)?;
    let mut dims: Vec<(u32, u32)> = Vec::new();
    for factor in &factors {
        let d = factor.module.dimension();
        let e = factor.endo_degree;
        assert_eq!(
            d % e,
            0,
            "the endomorphism field degree divides the dimension"
        );
        for _ in 0..e {
            dims.push(((d / e) as u32, e as u32));
        }
    }
    dims.sort_unstable();
    assert_eq!(
        dims.len(),
        group.p_regular_class_count(2),
        "count of absolutely irreducible modules must equal the 2-regular class count"
    );
    Ok(dims)
}

/// Is the module irreducible with endomorphism algebra of dimension one
/// (hence irreducible over every extension of GF(2))?
pub fn is_absolutely_irreducible(module: &GF2Module, seed: u64) -> Result<bool, GF2RepError> {
    let factors = chop(module, seed)?;
    Ok(factors.len() == 1 && factors[0].multiplicity == 1 && factors[0].endo_degree == 1)
}

/// One subgroup class of S6 admitting a four-dimensional absolutely
/// irreducible module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct S6SearchRow {
    /// Order of the subgroup.
    pub order: u64,
    /// Whether the class representative acts transitively on the six points.
    pub transitive: bool,
    /// Generators of the representative, in cycle notation.
    pub generators: Vec<String>,
    /// Output of [`abs_irred_dims`] for the representative.
    pub abs_irred_dims: Vec<(u32, u32)>,
    /// Whether the heart of the representative's degree-6 permutation module
    /// is itself absolutely irreducible.  A class can admit a 4-dimensional
    /// absolutely irreducible module while its own heart splits or picks up
    /// extra endomorphisms, so this column can differ from mere membership
    /// in the survey.
    pub heart_abs_irred: bool,
}

/// Survey the subgroup classes of S6 and keep those with a 4-dimensional
/// absolutely irreducible module, in canonical class order (ascending order,
/// ties by canonical representative).
pub fn s6_search(seed: u64) -> Result<Vec<S6SearchRow>, GF2RepError> {
    let s6 = PermGroup::symmetric(6);
    let classes = subgroup_classes(&s6).expect("|S6| = 720 is within the table limit");
    let mut rows = Vec::new();
    for class in &classes {
        let rep = &class.representative;
        let dims = abs_irred_dims(rep, seed)?;
        if !dims.iter().any(|&(d, _)| d == 4) {
            continue;
        }
        let heart = GF2Module::permutation_module(rep).heart()?;
        let heart_abs_irred = is_absolutely_irreducible(&heart, seed)?;
        rows.push(S6SearchRow {
            order: class.order,
            transitive: rep.is_transitive(),
            generators: rep.generators().iter().map(|g| g.to_string()).collect(),
            abs_irred_dims: dims,
            heart_abs_irred,
        });
    }
    Ok(rows)
}
