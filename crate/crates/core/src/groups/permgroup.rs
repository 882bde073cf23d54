//! Permutation groups with a deterministic stabiliser chain.
//!
//! [`PermGroup::order`] and [`PermGroup::contains`] go through a
//! Schreier–Sims stabiliser chain; everything heavier (Sylow subgroups,
//! conjugacy classes, derived and Frattini subgroups) enumerates elements,
//! which the supported group sizes make cheap.  All iteration orders are
//! fixed — sorted element lists, first-fit searches — so every computed
//! object is reproducible.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::perm::{Perm, PermError, MAX_DEGREE};
use super::GroupError;
use crate::sieve::is_prime;

/// Hard cap on explicit element enumeration.  The algorithms here are for
/// the small groups of the classification arguments; anything bigger is a
/// caller bug, not a workload.
pub const ENUMERATION_CAP: u64 = 1 << 20;

#[derive(Debug, Clone)]
struct Level {
    point: u8,
    gens: Vec<Perm>,
    /// `transversal[b]` maps `point` to `b`; `None` outside the orbit.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(degree: u8, point: u8) -> Level {
        let mut transversal = vec![None; degree as usize];
        transversal[point as usize] = Some(Perm::identity(degree));
        Level { point, gens: Vec::new(), transversal }
    }

    fn recompute(&mut self, degree: u8, gens: &[Perm]) {
        self.transversal = vec![None; degree as usize];
        self.transversal[self.point as usize] = Some(Perm::identity(degree));
        let mut queue = vec![self.point];
        let mut head = 0;
        while head < queue.len() {
            let b = queue[head];
            head += 1;
            let u = self.transversal[b as usize].unwrap();
            for s in gens {
                let c = s.apply(b);
                if self.transversal[c as usize].is_none() {
                    self.transversal[c as usize] = Some(u.then(s));
                    queue.push(c);
                }
            }
        }
    }

    fn orbit_size(&self) -> u64 {
        self.transversal.iter().filter(|t| t.is_some()).count() as u64
    }
}

#[derive(Debug, Clone)]
struct StabChain {
    degree: u8,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: u8, gens: &[Perm]) -> StabChain {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for g in gens {
            if !g.is_identity() {
                chain.insert_at(0, *g);
            }
        }
        chain.complete();
        chain
    }

    /// Sift `g` through levels `from..`, returning the residue and the
    /// level at which sifting stopped.
    fn sift_from(&self, from: usize, mut g: Perm) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let image = g.apply(level.point);
            match &level.transversal[image as usize] {
                None => return (g, i),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    fn insert_at(&mut self, level: usize, g: Perm) {
        debug_assert!(!g.is_identity());
        if level == self.levels.len() {
            let point = g.min_moved_point().expect("non-identity permutation");
            self.levels.push(Level::new(self.degree, point));
        }
        self.levels[level].gens.push(g);
    }

    /// Generators of the level-`level` group: everything added at this
    /// level or deeper, since deeper strong generators also fix the base
    /// points above `level`.
    fn effective_gens(&self, level: usize) -> Vec<Perm> {
        self.levels[level..].iter().flat_map(|lv| lv.gens.iter().copied()).collect()
    }

    /// Drive the chain to a fixed point of the strong-generation
    /// condition: with all transversals current, every Schreier generator
    /// of every level sifts to the identity through the levels below it.
    /// Each failure strictly enlarges some level's group (or creates a
    /// new level), so the restarts terminate.
    fn complete(&mut self) {
        'restart: loop {
            for l in (0..self.levels.len()).rev() {
                let gens = self.effective_gens(l);
                self.levels[l].recompute(self.degree, &gens);
            }
            for l in (0..self.levels.len()).rev() {
                let gens = self.effective_gens(l);
                let lv = &self.levels[l];
                for b in 0..self.degree {
                    let Some(u) = lv.transversal[b as usize] else { continue };
                    for s in &gens {
                        let c = s.apply(b);
                        let u_c = lv.transversal[c as usize]
                            .expect("orbit is closed under level generators");
                        let schreier = u.then(s).then(&u_c.inverse());
                        if schreier.is_identity() {
                            continue;
                        }
                        let (residue, stop) = self.sift_from(l + 1, schreier);
                        if !residue.is_identity() {
                            self.insert_at(stop, residue);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }

    fn order(&self) -> u64 {
        self.levels.iter().map(Level::orbit_size).product()
    }

    fn contains(&self, g: &Perm) -> bool {
        let (residue, _) = self.sift_from(0, *g);
        residue.is_identity()
    }
}

/// A finite permutation group given by generators.
#[derive(Debug)]
pub struct PermGroup {
    degree: u8,
    gens: Vec<Perm>,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Vec<Perm>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> PermGroup {
        let clone = PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            chain: OnceLock::new(),
            elements: OnceLock::new(),
        };
        if let Some(chain) = self.chain.get() {
            let _ = clone.chain.set(chain.clone());
        }
        if let Some(elements) = self.elements.get() {
            let _ = clone.elements.set(elements.clone());
        }
        clone
    }
}

impl PermGroup {
    pub fn new(degree: u8, gens: Vec<Perm>) -> Result<PermGroup, GroupError> {
        if degree == 0 || degree as usize > MAX_DEGREE {
            return Err(GroupError::BadDegree(degree));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup { degree, gens, chain: OnceLock::new(), elements: OnceLock::new() })
    }

    pub fn from_cycle_strings(degree: u8, gens: &[&str]) -> Result<PermGroup, GroupError> {
        let gens = gens
            .iter()
            .map(|text| Perm::parse(text, degree))
            .collect::<Result<Vec<_>, PermError>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn trivial(degree: u8) -> PermGroup {
        PermGroup::new(degree, Vec::new()).expect("valid degree")
    }

    pub fn symmetric(degree: u8) -> PermGroup {
        assert!(degree >= 1 && degree as usize <= MAX_DEGREE);
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Perm::parse("(1,2)", degree).unwrap());
        }
        if degree >= 3 {
            let cycle: Vec<String> = (1..=degree).map(|i| i.to_string()).collect();
            gens.push(Perm::parse(&format!("({})", cycle.join(",")), degree).unwrap());
        }
        PermGroup::new(degree, gens).expect("valid generators")
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::build(self.degree, &self.gens))
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    /// All elements, lexicographically sorted.  Panics above
    /// [`ENUMERATION_CAP`]; the classification workloads stay far below it.
    pub fn elements(&self) -> &[Perm] {
        self.elements.get_or_init(|| {
            let order = self.order();
            assert!(
                order <= ENUMERATION_CAP,
                "refusing to enumerate a group of order {order}"
            );
            let set = closure(self.degree, &self.gens);
            debug_assert_eq!(set.len() as u64, order);
            set.into_iter().collect()
        })
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_of(0).len() == self.degree as usize
    }

    fn orbit_of(&self, start: u8) -> Vec<u8> {
        let mut seen = vec![false; self.degree as usize];
        seen[start as usize] = true;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let b = queue[head];
            head += 1;
            for s in &self.gens {
                let c = s.apply(b);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    queue.push(c);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// Orbits on points, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u8>> {
        let mut assigned = vec![false; self.degree as usize];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if assigned[start as usize] {
                continue;
            }
            let orbit = self.orbit_of(start);
            for &b in &orbit {
                assigned[b as usize] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Conjugacy classes ordered by their lexicographically smallest
    /// member (which is the representative).
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let elements = self.elements();
        let mut done: BTreeSet<Perm> = BTreeSet::new();
        let mut classes = Vec::new();
        for &e in elements {
            if done.contains(&e) {
                continue;
            }
            let mut class = BTreeSet::new();
            class.insert(e);
            let mut queue = vec![e];
            while let Some(x) = queue.pop() {
                for s in &self.gens {
                    let y = x.conjugated_by(s);
                    if class.insert(y) {
                        queue.push(y);
                    }
                }
            }
            done.extend(class.iter().copied());
            classes.push(ConjugacyClass { representative: e, size: class.len() });
        }
        classes
    }

    /// Number of conjugacy classes of elements of order coprime to `p`
    /// (the p-regular classes) — by Brauer's theorem, the number of
    /// irreducible modules over an algebraically closed field of
    /// characteristic `p`.
    pub fn p_regular_class_count(&self, p: u32) -> usize {
        self.conjugacy_classes()
            .iter()
            .filter(|class| class.representative.order() % p != 0)
            .count()
    }

    /// A Sylow p-subgroup, built deterministically by repeated normaliser
    /// extension: while `|P| < p^v`, some `y` in `N_G(P) ∖ P` has
    /// `p | ord(yP)`, and a power of it extends `P` by index `p`.
    pub fn sylow(&self, p: u32) -> Result<PermGroup, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let mut target = 1u64;
        let mut n = self.order();
        while n % p as u64 == 0 {
            n /= p as u64;
            target *= p as u64;
        }
        if target == 1 {
            return Ok(PermGroup::trivial(self.degree));
        }
        let elements = self.elements();
        let mut sub_gens: Vec<Perm> = Vec::new();
        let mut sub: BTreeSet<Perm> = BTreeSet::new();
        sub.insert(Perm::identity(self.degree));
        while (sub.len() as u64) < target {
            let mut advanced = false;
            for y in elements {
                if sub.contains(y) {
                    continue;
                }
                let normalises = sub_gens.iter().all(|x| sub.contains(&x.conjugated_by(y)));
                if !normalises {
                    continue;
                }
                // Minimal k ≥ 1 with y^k ∈ P is the order of yP in N/P.
                let mut k = 1u32;
                let mut power = *y;
                while !sub.contains(&power) {
                    k += 1;
                    power = power.then(y);
                }
                if k % p == 0 {
                    let z = y.pow(k / p);
                    sub_gens.push(z);
                    sub = closure(self.degree, &sub_gens);
                    advanced = true;
                    break;
                }
            }
            assert!(advanced, "normaliser extension always succeeds below a Sylow subgroup");
        }
        PermGroup::new(self.degree, sub_gens)
    }

    /// The derived subgroup `[G, G]`, generated by all commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let elements = self.elements();
        let mut commutators: BTreeSet<Perm> = BTreeSet::new();
        for x in elements {
            for y in elements {
                commutators
                    .insert(x.inverse().then(&y.inverse()).then(x).then(y));
            }
        }
        let gens: Vec<Perm> = commutators.into_iter().filter(|c| !c.is_identity()).collect();
        let closed = closure(self.degree, &gens);
        group_from_elements(self.degree, &closed)
    }

    pub fn abelianization_order(&self) -> u64 {
        self.order() / self.derived_subgroup().order()
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        let mut n = self.order();
        while n % p as u64 == 0 {
            n /= p as u64;
        }
        n == 1
    }

    /// Frattini subgroup `Φ(P) = P^p · [P, P]` of a p-group.
    pub fn frattini_subgroup(&self, p: u32) -> Result<PermGroup, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        if !self.is_p_group(p) {
            return Err(GroupError::NotPGroup { order: self.order(), p });
        }
        let elements = self.elements();
        let mut gens: BTreeSet<Perm> = BTreeSet::new();
        for x in elements {
            gens.insert(x.pow(p));
            for y in elements {
                gens.insert(x.inverse().then(&y.inverse()).then(x).then(y));
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let closed = closure(self.degree, &gens);
        Ok(group_from_elements(self.degree, &closed))
    }

    /// Length of the iterated Frattini series of a p-group: the number of
    /// steps `P ⊃ Φ(P) ⊃ Φ(Φ(P)) ⊃ …` until trivial.  Equals 0 for the
    /// trivial group and 1 exactly for nontrivial elementary abelian `P`
    /// — each step is an elementary abelian layer, so this is the minimal
    /// number of wild inertia jumps the group can realise.
    pub fn p_length(&self, p: u32) -> Result<u32, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        if !self.is_p_group(p) {
            return Err(GroupError::NotPGroup { order: self.order(), p });
        }
        let mut current = self.clone();
        let mut length = 0;
        while current.order() > 1 {
            current = current.frattini_subgroup(p)?;
            length += 1;
        }
        Ok(length)
    }

    /// Exponent: lcm of the element orders.
    pub fn exponent(&self) -> u32 {
        self.elements()
            .iter()
            .fold(1u32, |acc, g| num_integer::lcm(acc, g.order()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Perm,
    pub size: usize,
}

/// The subgroup generated by `gens`, as a sorted element set.
pub(crate) fn closure(degree: u8, gens: &[Perm]) -> BTreeSet<Perm> {
    let mut set = BTreeSet::new();
    set.insert(Perm::identity(degree));
    let mut queue: Vec<Perm> = vec![Perm::identity(degree)];
    while let Some(x) = queue.pop() {
        for s in gens {
            let y = x.then(s);
            if set.insert(y) {
                assert!(
                    set.len() as u64 <= ENUMERATION_CAP,
                    "refusing to close a generating set past {ENUMERATION_CAP} elements"
                );
                queue.push(y);
            }
        }
    }
    set
}

/// Rebuild a [`PermGroup`] from an explicit subgroup element set, with a
/// small generating set chosen greedily over the sorted elements.
pub(crate) fn group_from_elements(degree: u8, elements: &BTreeSet<Perm>) -> PermGroup {
    let mut gens: Vec<Perm> = Vec::new();
    let mut have: BTreeSet<Perm> = BTreeSet::new();
    have.insert(Perm::identity(degree));
    for e in elements {
        if !have.contains(e) {
            gens.push(*e);
            have = closure(degree, &gens);
        }
    }
    debug_assert_eq!(have.len(), elements.len().max(1));
    let group = PermGroup::new(degree, gens).expect("elements share the degree");
    let _ = group.elements.set(elements.iter().copied().collect());
    group
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: u8, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(degree, gens).unwrap()
    }

    #[test]
    fn orders_of_reference_groups() {
        assert_eq!(PermGroup::symmetric(6).order(), 720);
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        assert_eq!(PermGroup::symmetric(1).order(), 1);
        assert_eq!(PermGroup::trivial(6).order(), 1);
        // Two five-element subgroup generating sets of S6 from the search
        // output: both copies of A5.
        assert_eq!(group(6, &["(2,5)(4,6)", "(3,5,4)"]).order(), 60);
        assert_eq!(group(6, &["(2,3)(5,6)", "(1,4,2)(3,5,6)"]).order(), 60);
        assert_eq!(group(6, &["(1,2,6,4)", "(1,6)(2,4)", "(1,4,2,6,3)"]).order(), 20);
        assert_eq!(group(6, &["(1,2)", "(1,2,3)", "(4,5,6)"]).order(), 18);
        assert_eq!(group(6, &["(1,2,3)", "(4,5,6)", "(2,3)(5,6)"]).order(), 18);
        assert_eq!(group(9, &["(1,2,3,4,5,6,7,8,9)", "(2,9)(3,8)(4,7)(5,6)"]).order(), 18);
        assert_eq!(group(6, &["(1,2,3,4,5,6)"]).order(), 6);
    }

    #[test]
    fn order_matches_enumeration() {
        let samples = [
            PermGroup::symmetric(5),
            PermGroup::symmetric(6),
            group(6, &["(2,5)(4,6)", "(3,5,4)"]),
            group(6, &["(1,2,6,4)", "(1,6)(2,4)", "(1,4,2,6,3)"]),
            group(9, &["(1,2,3,4,5,6,7,8,9)", "(2,9)(3,8)(4,7)(5,6)"]),
            group(8, &["(1,2,3,4,5,6,7,8)"]),
            PermGroup::trivial(3),
        ];
        for g in &samples {
            assert_eq!(g.order(), g.elements().len() as u64);
        }
    }

    #[test]
    fn contains_and_membership() {
        let a5 = group(6, &["(2,5)(4,6)", "(3,5,4)"]);
        for e in a5.elements() {
            assert!(a5.contains(e));
        }
        assert!(!a5.contains(&Perm::parse("(1,2)", 6).unwrap()));
        assert!(a5.contains(&Perm::identity(6)));
        // Wrong degree is simply not a member.
        assert!(!a5.contains(&Perm::identity(5)));
    }

    #[test]
    fn transitivity_and_orbits() {
        assert!(PermGroup::symmetric(6).is_transitive());
        assert!(group(6, &["(1,2,3,4,5,6)"]).is_transitive());
        let f20 = group(6, &["(1,2,6,4)", "(1,6)(2,4)", "(1,4,2,6,3)"]);
        assert!(!f20.is_transitive());
        assert_eq!(f20.orbits(), vec![vec![0, 1, 2, 3, 5], vec![4]]);
        let s3xc3 = group(6, &["(1,2)", "(1,2,3)", "(4,5,6)"]);
        assert!(!s3xc3.is_transitive());
        assert_eq!(s3xc3.orbits(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn conjugacy_class_counts() {
        assert_eq!(PermGroup::symmetric(6).conjugacy_classes().len(), 11);
        assert_eq!(PermGroup::symmetric(4).conjugacy_classes().len(), 5);
        let a5 = group(6, &["(2,5)(4,6)", "(3,5,4)"]);
        assert_eq!(a5.conjugacy_classes().len(), 5);
        let sizes: usize = a5.conjugacy_classes().iter().map(|c| c.size).sum();
        assert_eq!(sizes, 60);
    }

    #[test]
    fn p_regular_class_counts() {
        // 2-regular classes of S6: cycle types 1, 3, 3+3, 5.
        assert_eq!(PermGroup::symmetric(6).p_regular_class_count(2), 4);
        let a5 = group(6, &["(2,5)(4,6)", "(3,5,4)"]);
        assert_eq!(a5.p_regular_class_count(2), 4);
        let d9 = group(9, &["(1,2,3,4,5,6,7,8,9)", "(2,9)(3,8)(4,7)(5,6)"]);
        assert_eq!(d9.p_regular_class_count(3), 2);
        let gen_dihedral = group(6, &["(1,2,3)", "(4,5,6)", "(2,3)(5,6)"]);
        assert_eq!(gen_dihedral.p_regular_class_count(3), 2);
        let c2 = group(2, &["(1,2)"]);
        assert_eq!(c2.p_regular_class_count(2), 1);
    }

    #[test]
    fn sylow_subgroups() {
        let s6 = PermGroup::symmetric(6);
        let syl2 = s6.sylow(2).unwrap();
        assert_eq!(syl2.order(), 16);
        assert!(syl2.is_p_group(2));
        let syl3 = s6.sylow(3).unwrap();
        assert_eq!(syl3.order(), 9);
        assert_eq!(syl3.exponent(), 3);

        let s3xc3 = group(6, &["(1,2)", "(1,2,3)", "(4,5,6)"]);
        let syl = s3xc3.sylow(3).unwrap();
        assert_eq!(syl.order(), 9);
        assert_eq!(syl.exponent(), 3); // elementary abelian

        let d9 = group(9, &["(1,2,3,4,5,6,7,8,9)", "(2,9)(3,8)(4,7)(5,6)"]);
        let syl = d9.sylow(3).unwrap();
        assert_eq!(syl.order(), 9);
        assert_eq!(syl.exponent(), 9); // cyclic of order 9

        assert_eq!(s6.sylow(7).unwrap().order(), 1);
        assert!(matches!(s6.sylow(4), Err(GroupError::NotPrime(4))));
        // Sylow elements are genuine subgroup members.
        for e in syl2.elements() {
            assert!(s6.contains(e));
        }
    }

    #[test]
    fn derived_subgroups_and_abelianizations() {
        let s6 = PermGroup::symmetric(6);
        assert_eq!(s6.derived_subgroup().order(), 360);
        assert_eq!(s6.abelianization_order(), 2);

        let a5 = group(6, &["(2,5)(4,6)", "(3,5,4)"]);
        assert_eq!(a5.derived_subgroup().order(), 60); // perfect

        let s4 = PermGroup::symmetric(4);
        assert_eq!(s4.derived_subgroup().order(), 12);
        assert_eq!(s4.derived_subgroup().derived_subgroup().order(), 4);

        let c6 = group(6, &["(1,2,3,4,5,6)"]);
        assert_eq!(c6.derived_subgroup().order(), 1);
        assert_eq!(c6.abelianization_order(), 6);

        let d9 = group(9, &["(1,2,3,4,5,6,7,8,9)", "(2,9)(3,8)(4,7)(5,6)"]);
        assert_eq!(d9.abelianization_order(), 2);
    }

    #[test]
    fn frattini_series_lengths() {
        let c9 = group(9, &["(1,2,3,4,5,6,7,8,9)"]);
        assert_eq!(c9.frattini_subgroup(3).unwrap().order(), 3);
        assert_eq!(c9.p_length(3).unwrap(), 2);

        let c3xc3 = group(6, &["(1,2,3)", "(4,5,6)"]);
        assert_eq!(c3xc3.frattini_subgroup(3).unwrap().order(), 1);
        assert_eq!(c3xc3.p_length(3).unwrap(), 1);

        let c8 = group(8, &["(1,2,3,4,5,6,7,8)"]);
        assert_eq!(c8.p_length(2).unwrap(), 3);

        let d8 = PermGroup::symmetric(4).sylow(2).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.frattini_subgroup(2).unwrap().order(), 2);
        assert_eq!(d8.p_length(2).unwrap(), 2);

        assert_eq!(PermGroup::trivial(4).p_length(2).unwrap(), 0);
        assert!(matches!(
            PermGroup::symmetric(6).p_length(2),
            Err(GroupError::NotPGroup { order: 720, p: 2 })
        ));
    }

    #[test]
    fn construction_validation() {
        assert!(matches!(
            PermGroup::new(0, vec![]),
            Err(GroupError::BadDegree(0))
        ));
        assert!(matches!(
            PermGroup::new(17, vec![]),
            Err(GroupError::BadDegree(17))
        ));
        assert!(matches!(
            PermGroup::new(6, vec![Perm::identity(5)]),
            Err(GroupError::DegreeMismatch { expected: 6, found: 5 })
        ));
        assert!(matches!(
            PermGroup::from_cycle_strings(6, &["(1,99)"]),
            Err(GroupError::Perm(_))
        ));
    }
}
