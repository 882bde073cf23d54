//! Composition series over GF(2) via randomized splitting.
//!
//! The splitting test follows the classical pattern: draw an element of the
//! enveloping algebra, compute its minimal polynomial, and inspect the
//! nullspace of an irreducible factor evaluated at the element.  Spinning a
//! nullspace vector either exhibits a proper submodule or, when the nullity
//! equals the factor degree, proves irreducibility outright: in that case the
//! nullspace is a one-dimensional vector space over the field cut out by the
//! factor, so every nonzero vector in it generates the same submodule, and a
//! second spin on the transposed module rules out proper submodules with
//! trivial intersection.
//!
//! Randomness is driven entirely by the caller-supplied seed, so runs are
//! reproducible; a run that fails to decide within the sampling cap reports
//! a fresh seed to retry with instead of silently looping.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{GF2Matrix, GF2Vector, RowBasis};
use super::module::{hom_dimension, GF2Module};
use super::poly::GF2Poly;
use super::GF2RepError;

/// An isomorphism class of composition factors discovered by [`chop`].
#[derive(Debug, Clone)]
pub struct CompositionFactor {
    /// A representative module for the class.
    pub module: GF2Module,
    /// Dimension of the endomorphism field over GF(2).
    pub endo_degree: usize,
    /// How many times the class occurs in the composition series.
    pub multiplicity: usize,
}

/// How many random algebra elements to try before giving up on a module.
const SAMPLE_CAP: u32 = 64;

/// How many nullspace basis vectors to spin per factor when the nullity
/// exceeds the factor degree (in which case spinning is only a heuristic
/// and the next random element may succeed where this one stalls).
const SPIN_CAP: usize = 8;

/// Decompose `module` into composition factors, merging isomorphic factors
/// and recording multiplicities and endomorphism-field degrees.
///
/// The result is sorted by dimension, then by endomorphism degree.  The same
/// seed always produces the same run; different seeds may discover the
/// factors in a different order but always the same multiset of classes.
pub fn chop(module: &GF2Module, seed: u64) -> Result<Vec<CompositionFactor>, GF2RepError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stack = vec![module.clone()];
    let mut factors: Vec<CompositionFactor> = Vec::new();
    while let Some(m) = stack.pop() {
        if m.dimension() == 0 {
            continue;
        }
        if m.action().is_empty() {
            // A trivial group acting on d dimensions: d copies of the
            // one-dimensional module.
            let line = GF2Module::new(m.group().clone(), vec![], 1).expect("dimension 1 fits");
            add_factor(&mut factors, line, m.dimension());
            continue;
        }
        match decide(&m, &mut rng)? {
            Decision::Irreducible => add_factor(&mut factors, m, 1),
            Decision::Split(sub) => {
                stack.push(m.quotient(&sub));
                stack.push(m.submodule(&sub));
            }
        }
    }
    let total: usize = factors
        .iter()
        .map(|f| f.module.dimension() * f.multiplicity)
        .sum();
    assert_eq!(
        total,
        module.dimension(),
        "composition factor dimensions must account for the whole module"
    );
    factors.sort_by_key(|f| (f.module.dimension(), f.endo_degree));
    Ok(factors)
}

/// Merge an irreducible `found` into the running list of classes.
fn add_factor(factors: &mut Vec<CompositionFactor>, found: GF2Module, count: usize) {
    for f in factors.iter_mut() {
        if f.module.dimension() == found.dimension() && hom_dimension(&f.module, &found) > 0 {
            f.multiplicity += count;
            return;
        }
    }
    let endo_degree = hom_dimension(&found, &found);
    factors.push(CompositionFactor {
        module: found,
        endo_degree,
        multiplicity: count,
    });
}

enum Decision {
    Irreducible,
    /// A basis for a proper nonzero submodule.
    Split(RowBasis),
}

/// Decide whether `m` is irreducible or exhibit a proper submodule.
fn decide(m: &GF2Module, rng: &mut ChaCha8Rng) -> Result<Decision, GF2RepError> {
    let d = m.dimension();
    if d == 1 {
        return Ok(Decision::Irreducible);
    }
    let dual = m.transpose_module();
    for _ in 0..SAMPLE_CAP {
        let a = random_algebra_element(m, rng);
        let minpoly = minimal_polynomial(&a);
        let mut irreducibles: Vec<GF2Poly> =
            minpoly.factor(rng).into_iter().map(|(f, _)| f).collect();
        irreducibles.sort_by_key(|f| f.degree());
        for f in &irreducibles {
            let deg = f.degree().expect("factors of a nonzero polynomial are nonzero");
            let fa = evaluate(f, &a);
            let null = fa.left_nullspace();
            assert!(
                !null.is_empty(),
                "an irreducible factor of the minimal polynomial has a kernel"
            );
            let conclusive = null.len() == deg;
            let tries = if conclusive { 1 } else { null.len().min(SPIN_CAP) };
            for v in null.iter().take(tries) {
                let spun = m.spin(v);
                if spun.dim() < d {
                    return Ok(Decision::Split(spun));
                }
            }
            let dual_null = fa.transpose().left_nullspace();
            assert_eq!(dual_null.len(), null.len(), "transpose preserves nullity");
            let dual_tries = if conclusive { 1 } else { dual_null.len().min(SPIN_CAP) };
            for w in dual_null.iter().take(dual_tries) {
                let spun = dual.spin(w);
                if spun.dim() < d {
                    return Ok(Decision::Split(m.orthogonal_complement(&spun)));
                }
            }
            if conclusive {
                return Ok(Decision::Irreducible);
            }
        }
    }
    Err(GF2RepError::IterationCap {
        attempts: SAMPLE_CAP,
        suggested_seed: rng.gen(),
    })
}

/// A random element of the enveloping algebra: a short sum of short words
/// in the acting matrices, optionally shifted by the identity.
fn random_algebra_element(m: &GF2Module, rng: &mut ChaCha8Rng) -> GF2Matrix {
    let d = m.dimension();
    let gens = m.action();
    let mut acc = GF2Matrix::zero(d, d);
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let len = rng.gen_range(1..=3);
        let mut word = GF2Matrix::identity(d);
        for _ in 0..len {
            word = word.mul(&gens[rng.gen_range(0..gens.len())]);
        }
        acc.xor_with(&word);
    }
    if rng.gen::<bool>() {
        acc.xor_with(&GF2Matrix::identity(d));
    }
    acc
}

/// The minimal polynomial of a square matrix over GF(2).
///
/// Standard Krylov approach: for seed vectors not yet in the accumulated
/// Krylov span, iterate `v, vA, vA^2, ...` while tracking each reduced row as
/// `v . p(A)` for an explicit polynomial `p`; the first linear dependency
/// yields the local minimal polynomial of the seed, and the overall minimal
/// polynomial is the lcm of the local ones.
pub(crate) fn minimal_polynomial(a: &GF2Matrix) -> GF2Poly {
    let d = a.rows();
    assert_eq!(d, a.cols(), "minimal polynomial needs a square matrix");
    assert!(d > 0, "minimal polynomial of an empty matrix is undefined");
    let mut overall = GF2Poly::one();
    let mut span = RowBasis::new(d);
    for start in 0..d {
        let seed = GF2Vector::unit(d, start);
        if span.contains(&seed) {
            continue;
        }
        // Echelonized Krylov rows for this seed, each tagged with the
        // polynomial expressing it in terms of the seed.
        let mut rows: Vec<(GF2Vector, GF2Poly, usize)> = Vec::new();
        let mut raw = seed;
        let mut power = GF2Poly::one();
        loop {
            let mut v = raw.clone();
            let mut p = power.clone();
            for (row, rp, pivot) in &rows {
                if v.get(*pivot) {
                    v.xor_with(row);
                    p = p.add(rp);
                }
            }
            match v.leading_bit() {
                None => {
                    overall = overall.lcm(&p);
                    break;
                }
                Some(pivot) => {
                    rows.push((v, p, pivot));
                }
            }
            raw = a.vec_mul(&raw);
            power = power.shifted(1);
        }
        for (row, _, _) in rows {
            span.insert(row);
        }
        if span.dim() == d {
            break;
        }
    }
    overall
}

/// Evaluate a polynomial at a square matrix (Horner's rule).
pub(crate) fn evaluate(f: &GF2Poly, a: &GF2Matrix) -> GF2Matrix {
    let d = a.rows();
    let mut acc = GF2Matrix::zero(d, d);
    let Some(deg) = f.degree() else {
        return acc;
    };
    let identity = GF2Matrix::identity(d);
    for k in (0..=deg).rev() {
        acc = acc.mul(a);
        if f.coeff(k) {
            acc.xor_with(&identity);
        }
    }
    acc
}
