//! Classification of all subgroups of a small group up to conjugacy.
//!
//! The search walks the subgroup lattice upward: every subgroup sits at
//! the top of a maximal chain, and each step of such a chain is generated
//! by the step below it together with any single element outside it.  So
//! extending every known conjugacy-class representative by every single
//! element, and closing the result, visits every subgroup class.  All
//! conjugates of every discovered subgroup are recorded, which keeps the
//! frontier small and makes the dedup test exact.

use std::collections::{HashSet, VecDeque};

use super::perm::Perm;
use super::permgroup::{group_from_elements, PermGroup};
use super::GroupError;

/// Largest group order for which a full multiplication table is built.
pub const MAX_TABLE_ORDER: u64 = 1024;

/// One conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    /// Common order of the subgroups in the class.
    pub order: u64,
    /// Number of distinct conjugates.
    pub class_size: usize,
    /// The representative with the lexicographically smallest element set.
    pub representative: PermGroup,
}

struct GroupTable {
    elements: Vec<Perm>,
    n: usize,
    mult: Vec<u16>,
    inv: Vec<u16>,
    /// Indices of the ambient group's generators, for conjugation orbits.
    gen_indices: Vec<u16>,
}

impl GroupTable {
    fn build(group: &PermGroup) -> Result<GroupTable, GroupError> {
        let order = group.order();
        if order > MAX_TABLE_ORDER {
            return Err(GroupError::OrderLimitExceeded { order, limit: MAX_TABLE_ORDER });
        }
        let elements: Vec<Perm> = group.elements().to_vec();
        let n = elements.len();
        let index_of = |p: &Perm| -> u16 {
            elements.binary_search(p).expect("product stays in the group") as u16
        };
        let mut mult = vec![0u16; n * n];
        let mut inv = vec![0u16; n];
        for (i, x) in elements.iter().enumerate() {
            inv[i] = index_of(&x.inverse());
            for (j, y) in elements.iter().enumerate() {
                mult[i * n + j] = index_of(&x.then(y));
            }
        }
        let gen_indices = group.generators().iter().map(index_of).collect();
        Ok(GroupTable { elements, n, mult, inv, gen_indices })
    }

    fn mul(&self, i: u16, j: u16) -> u16 {
        self.mult[i as usize * self.n + j as usize]
    }

    /// x ↦ g⁻¹ x g, elementwise on a sorted index set.
    fn conjugate_set(&self, set: &[u16], g: u16) -> Vec<u16> {
        let g_inv = self.inv[g as usize];
        let mut image: Vec<u16> = set.iter().map(|&x| self.mul(self.mul(g_inv, x), g)).collect();
        image.sort_unstable();
        image
    }

    /// Sorted element-index set of ⟨gens⟩.
    fn close(&self, gens: &[u16]) -> Vec<u16> {
        let mut member = vec![false; self.n];
        member[0] = true; // identity is the smallest element, hence index 0
        let mut queue: Vec<u16> = vec![0];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y as usize] {
                    member[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.n as u16).filter(|&i| member[i as usize]).collect()
    }

    /// All conjugates of `set` under the ambient group, sorted, smallest
    /// (lexicographically) first.
    fn conjugation_orbit(&self, set: &[u16]) -> Vec<Vec<u16>> {
        let mut orbit: HashSet<Vec<u16>> = HashSet::new();
        orbit.insert(set.to_vec());
        let mut queue = vec![set.to_vec()];
        while let Some(current) = queue.pop() {
            for &g in &self.gen_indices {
                let image = self.conjugate_set(&current, g);
                if !orbit.contains(&image) {
                    orbit.insert(image.clone());
                    queue.push(image);
                }
            }
        }
        let mut orbit: Vec<Vec<u16>> = orbit.into_iter().collect();
        orbit.sort_unstable();
        orbit
    }
}

struct ClassRecord {
    canonical: Vec<u16>,
    class_size: usize,
    /// The class member that was discovered first.  Extensions grow this
    /// member rather than the canonical one, because `gens` generate it;
    /// up to conjugacy that explores exactly the same subgroups.
    base: Vec<u16>,
    gens: Vec<u16>,
}

/// All subgroups of `group` up to conjugacy, sorted by order and then by
/// the representative's element set.
pub fn subgroup_classes(group: &PermGroup) -> Result<Vec<SubgroupClass>, GroupError> {
    let table = GroupTable::build(group)?;
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    let mut classes: Vec<ClassRecord> = Vec::new();
    let mut frontier: VecDeque<usize> = VecDeque::new();

    let trivial =
        ClassRecord { canonical: vec![0], class_size: 1, base: vec![0], gens: Vec::new() };
    seen.insert(trivial.canonical.clone());
    classes.push(trivial);
    frontier.push_back(0);

    while let Some(class_index) = frontier.pop_front() {
        let base = classes[class_index].base.clone();
        let base_gens = classes[class_index].gens.clone();
        let mut in_base = vec![false; table.n];
        for &x in &base {
            in_base[x as usize] = true;
        }
        for g in 0..table.n as u16 {
            if in_base[g as usize] {
                continue;
            }
            let mut gens = base_gens.clone();
            gens.push(g);
            let extension = table.close(&gens);
            if seen.contains(&extension) {
                continue;
            }
            let orbit = table.conjugation_orbit(&extension);
            let canonical = orbit[0].clone();
            let record =
                ClassRecord { canonical, class_size: orbit.len(), base: extension, gens };
            seen.extend(orbit);
            classes.push(record);
            frontier.push_back(classes.len() - 1);
        }
    }

    classes.sort_by(|a, b| {
        (a.canonical.len(), &a.canonical).cmp(&(b.canonical.len(), &b.canonical))
    });
    let result = classes
        .into_iter()
        .map(|record| {
            let members = record
                .canonical
                .iter()
                .map(|&i| table.elements[i as usize])
                .collect();
            SubgroupClass {
                order: record.canonical.len() as u64,
                class_size: record.class_size,
                representative: group_from_elements(group.degree(), &members),
            }
        })
        .collect();
    Ok(result)
}
