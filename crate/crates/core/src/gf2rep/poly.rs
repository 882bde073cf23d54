//! Polynomials over GF(2), bit-packed, with complete factorization.
//!
//! The chop needs minimal polynomials of algebra elements and their
//! irreducible factors.  Degrees stay below the module dimension (≤ 1024),
//! so quadratic kernels are fine.  Factorization is squarefree
//! decomposition, then distinct-degree splitting, then Cantor–Zassenhaus
//! equal-degree splitting with randomness drawn from the caller's seeded
//! generator — the one source of randomness in the whole crate.

use rand::Rng;

/// A polynomial over GF(2); bit `k` of the backing words is the
/// coefficient of x^k.  Always trimmed: the last word is nonzero unless
/// the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Poly {
    words: Vec<u64>,
}

impl GF2Poly {
    pub fn zero() -> GF2Poly {
        GF2Poly { words: Vec::new() }
    }

    pub fn one() -> GF2Poly {
        GF2Poly { words: vec![1] }
    }

    pub fn x() -> GF2Poly {
        GF2Poly { words: vec![2] }
    }

    pub fn monomial(k: usize) -> GF2Poly {
        let mut p = GF2Poly::zero();
        p.set(k);
        p
    }

    pub fn from_support(support: &[usize]) -> GF2Poly {
        let mut p = GF2Poly::zero();
        for &k in support {
            p.set(k);
        }
        p
    }

    pub fn support(&self) -> Vec<usize> {
        let mut s = Vec::new();
        for (i, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                s.push(i * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.words.get(k / 64).is_some_and(|w| w >> (k % 64) & 1 == 1)
    }

    fn set(&mut self, k: usize) {
        if self.words.len() <= k / 64 {
            self.words.resize(k / 64 + 1, 0);
        }
        self.words[k / 64] |= 1 << (k % 64);
        self.trim();
    }

    pub fn add(&self, other: &GF2Poly) -> GF2Poly {
        let mut words = self.words.clone();
        if words.len() < other.words.len() {
            words.resize(other.words.len(), 0);
        }
        for (a, b) in words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        let mut p = GF2Poly { words };
        p.trim();
        p
    }

    /// Multiplication by `x^k`.
    pub fn shifted(&self, k: usize) -> GF2Poly {
        if self.is_zero() {
            return GF2Poly::zero();
        }
        let word_shift = k / 64;
        let bit_shift = k % 64;
        let mut words = vec![0u64; self.words.len() + word_shift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + word_shift] |= w << bit_shift;
            if bit_shift != 0 {
                words[i + word_shift + 1] |= w >> (64 - bit_shift);
            }
        }
        let mut p = GF2Poly { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &GF2Poly) -> GF2Poly {
        let mut acc = GF2Poly::zero();
        for k in self.support() {
            acc = acc.add(&other.shifted(k));
        }
        acc
    }

    /// f(x²) — which over GF(2) equals f(x)².
    pub fn square(&self) -> GF2Poly {
        let mut p = GF2Poly::zero();
        for k in self.support() {
            p.set(2 * k);
        }
        p
    }

    /// Inverse of [`GF2Poly::square`]; callers must pass a square (all
    /// exponents even).
    fn sqrt(&self) -> GF2Poly {
        let mut p = GF2Poly::zero();
        for k in self.support() {
            debug_assert!(k % 2 == 0, "sqrt of a non-square");
            p.set(k / 2);
        }
        p
    }

    pub fn derivative(&self) -> GF2Poly {
        let mut p = GF2Poly::zero();
        for k in self.support() {
            if k % 2 == 1 {
                p.set(k - 1);
            }
        }
        p
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn divmod(&self, divisor: &GF2Poly) -> (GF2Poly, GF2Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let mut quotient = GF2Poly::zero();
        let mut remainder = self.clone();
        while let Some(r) = remainder.degree() {
            if r < d {
                break;
            }
            let shift = r - d;
            remainder = remainder.add(&divisor.shifted(shift));
            quotient.set(shift);
        }
        (quotient, remainder)
    }

    pub fn rem(&self, modulus: &GF2Poly) -> GF2Poly {
        self.divmod(modulus).1
    }

    pub fn divides(&self, other: &GF2Poly) -> bool {
        other.divmod(self).1.is_zero()
    }

    pub fn gcd(&self, other: &GF2Poly) -> GF2Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Least common multiple; zero if either argument is zero.
    pub fn lcm(&self, other: &GF2Poly) -> GF2Poly {
        if self.is_zero() || other.is_zero() {
            return GF2Poly::zero();
        }
        let g = self.gcd(other);
        self.mul(other).divmod(&g).0
    }

    /// Pretty form like `x^4+x+1`, mostly for test diagnostics.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<String> = self
            .support()
            .into_iter()
            .rev()
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            })
            .collect();
        terms.dedup();
        terms.join("+")
    }

    /// Complete factorization into irreducibles with multiplicities,
    /// sorted by (degree, coefficient bits).  Randomness for the
    /// equal-degree stage comes from `rng`, so results are reproducible
    /// per seed (the factor set itself is of course seed-independent).
    pub fn factor<R: Rng>(&self, rng: &mut R) -> Vec<(GF2Poly, usize)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut factors = factor_inner(self, rng);
        factors.sort_by(|(p, _), (q, _)| {
            (p.degree(), &p.words).cmp(&(q.degree(), &q.words))
        });
        factors
    }
}

fn factor_inner<R: Rng>(f: &GF2Poly, rng: &mut R) -> Vec<(GF2Poly, usize)> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let derivative = f.derivative();
    if derivative.is_zero() {
        // All multiplicities even: f is a perfect square.
        let root = f.sqrt();
        return factor_inner(&root, rng)
            .into_iter()
            .map(|(p, m)| (p, 2 * m))
            .collect();
    }
    // The squarefree polynomial carrying every odd-multiplicity factor.
    let squarefree = f.divmod(&f.gcd(&derivative)).0;
    let mut result = Vec::new();
    let mut rest = f.clone();
    for q in factor_squarefree(&squarefree, rng) {
        let mut multiplicity = 0;
        while q.divides(&rest) {
            rest = rest.divmod(&q).0;
            multiplicity += 1;
        }
        debug_assert!(multiplicity > 0);
        result.push((q, multiplicity));
    }
    // What remains has all-even multiplicities (its derivative vanishes).
    if rest.degree().unwrap_or(0) > 0 {
        result.extend(factor_inner(&rest, rng));
    }
    result
}

/// Distinct-degree splitting of a squarefree polynomial, then
/// equal-degree splitting of each part.
fn factor_squarefree<R: Rng>(s: &GF2Poly, rng: &mut R) -> Vec<GF2Poly> {
    let mut result = Vec::new();
    let mut s = s.clone();
    // h = x^(2^d) mod s, maintained by repeated squaring.
    let mut h = GF2Poly::x().rem(&s);
    let mut d = 0;
    while s.degree().unwrap_or(0) > 0 {
        d += 1;
        if s.degree().unwrap() < 2 * d {
            // What's left is irreducible.
            result.push(s.clone());
            break;
        }
        h = h.square().rem(&s);
        let split = h.add(&GF2Poly::x()).gcd(&s);
        if split.degree().unwrap_or(0) > 0 {
            equal_degree_split(&split, d, rng, &mut result);
            s = s.divmod(&split).0;
            h = h.rem(&s);
        }
    }
    result
}

/// Cantor–Zassenhaus over GF(2): `c` is a product of distinct
/// irreducibles, all of degree `d`.
fn equal_degree_split<R: Rng>(c: &GF2Poly, d: usize, rng: &mut R, out: &mut Vec<GF2Poly>) {
    let deg_c = c.degree().unwrap_or(0);
    if deg_c == d {
        out.push(c.clone());
        return;
    }
    debug_assert!(deg_c % d == 0 && deg_c > 0);
    loop {
        // Random polynomial of degree < deg_c.
        let mut a = GF2Poly::zero();
        for k in 0..deg_c {
            if rng.gen::<bool>() {
                a.set(k);
            }
        }
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // Trace map a + a² + a⁴ + … + a^(2^(d−1)) mod c lands in GF(2)
        // on each factor, and the fibers split c about half the time.
        let mut trace = a.clone();
        let mut power = a.clone();
        for _ in 1..d {
            power = power.square().rem(c);
            trace = trace.add(&power);
        }
        let g = trace.gcd(c);
        let deg_g = g.degree().unwrap_or(0);
        if deg_g == 0 || deg_g == deg_c {
            continue;
        }
        equal_degree_split(&g, d, rng, out);
        equal_degree_split(&c.divmod(&g).0, d, rng, out);
        return;
    }
}
