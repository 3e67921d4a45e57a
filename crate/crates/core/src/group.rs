//! The two group backends and element-level arithmetic.
//!
//! Every group is materialized as a set of element ids `0..order` with the
//! identity at id 0. Permutation-backed groups number their elements in
//! lexicographic order of the permutations; table-backed groups carry their
//! own product map. All structural algorithms work on ids.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::bsgs::StabilizerChain;
use crate::error::{GpiError, Result};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// Element identifier inside one group.
pub type Elem = u32;

/// Configured ceilings. Everything here is desk scale by contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order that will be enumerated.
    pub max_elements: usize,
    /// Largest permutation degree accepted.
    pub max_degree: usize,
    /// Largest order for table-backed groups (semidirect products, table quotients).
    pub max_table: usize,
    /// Permutation groups up to this order get a cached multiplication table.
    pub mul_table: usize,
    /// Bound for `recognize_small`.
    pub small_bound: usize,
    /// Bound for brute-force subgroup scans (quaternion-freeness).
    pub brute_force_bound: usize,
    /// State budget for chief-series searches.
    pub max_search_states: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 1_000_000,
            max_degree: 4096,
            max_table: 4096,
            mul_table: 2048,
            small_bound: 512,
            brute_force_bound: 256,
            max_search_states: 1_000_000,
        }
    }
}

#[derive(Debug, Clone)]
enum Backend {
    Perm { degree: usize, gens: Vec<Perm> },
    Table,
}

struct Store {
    perms: Vec<Perm>,
    index: HashMap<Perm, Elem>,
    table: Option<Vec<Elem>>,
    inv: Vec<Elem>,
}

/// Conjugacy classes, each sorted, listed in order of their least element.
#[derive(Debug, Clone)]
pub struct Classes {
    pub classes: Vec<Vec<Elem>>,
    pub class_of: Vec<u32>,
}

/// A finite group given by generators, with cached order, elements and
/// conjugacy data.
pub struct Group {
    backend: Backend,
    order: usize,
    limits: Limits,
    store: OnceLock<Store>,
    gen_ids: OnceLock<Vec<Elem>>,
    element_orders: OnceLock<Vec<u32>>,
    classes: OnceLock<Classes>,
    pub(crate) normal_lattice: OnceLock<Vec<Subgroup>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.backend {
            Backend::Perm { degree, gens } => f
                .debug_struct("Group")
                .field("order", &self.order)
                .field("degree", degree)
                .field("generators", gens)
                .finish(),
            Backend::Table => f
                .debug_struct("Group")
                .field("order", &self.order)
                .field("backend", &"table")
                .finish(),
        }
    }
}

/// Convenience wrapper over [`Group::from_perms`] with default limits.
pub fn group_from_generators(gens: Vec<Perm>) -> Result<Group> {
    let degree = gens.first().map_or(1, Perm::degree);
    Group::from_perms(degree, gens, &Limits::default())
}

impl Group {
    /// Permutation group of the given degree. The order comes from a
    /// stabilizer chain; elements are enumerated on first use.
    pub fn from_perms(degree: usize, gens: Vec<Perm>, limits: &Limits) -> Result<Group> {
        if degree == 0 {
            return Err(GpiError::InvalidPerm("degree must be positive".into()));
        }
        if degree > limits.max_degree {
            return Err(GpiError::TooLarge {
                what: "degree",
                size: degree as u128,
                limit: limits.max_degree as u128,
            });
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(GpiError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let order = StabilizerChain::new(degree, &gens).order();
        if order > limits.max_elements as u128 {
            return Err(GpiError::TooLarge {
                what: "group order",
                size: order,
                limit: limits.max_elements as u128,
            });
        }
        Ok(Group {
            backend: Backend::Perm { degree, gens },
            order: order as usize,
            limits: limits.clone(),
            store: OnceLock::new(),
            gen_ids: OnceLock::new(),
            element_orders: OnceLock::new(),
            classes: OnceLock::new(),
            normal_lattice: OnceLock::new(),
        })
    }

    /// Permutation group whose elements and products are already known, e.g.
    /// a quotient acting on cosets or a subgroup of an enumerated group.
    /// `elements[i] · elements[j] = elements[product(i, j)]`.
    pub(crate) fn from_known_elements(
        degree: usize,
        gens: Vec<Perm>,
        elements: Vec<Perm>,
        product: impl Fn(usize, usize) -> usize,
        limits: &Limits,
    ) -> Group {
        let n = elements.len();
        let mut order_idx: Vec<usize> = (0..n).collect();
        order_idx.sort_by(|&a, &b| elements[a].cmp(&elements[b]));
        let mut new_of = vec![0u32; n];
        for (new, &old) in order_idx.iter().enumerate() {
            new_of[old] = new as Elem;
        }
        let perms: Vec<Perm> = order_idx.iter().map(|&old| elements[old].clone()).collect();
        let index: HashMap<Perm, Elem> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as Elem))
            .collect();
        let mut table = vec![0 as Elem; n * n];
        for a in 0..n {
            for b in 0..n {
                table[new_of[a] as usize * n + new_of[b] as usize] = new_of[product(a, b)];
            }
        }
        let mut inv = vec![0 as Elem; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b as Elem;
                    break;
                }
            }
        }
        let g = Group {
            backend: Backend::Perm { degree, gens },
            order: n,
            limits: limits.clone(),
            store: OnceLock::new(),
            gen_ids: OnceLock::new(),
            element_orders: OnceLock::new(),
            classes: OnceLock::new(),
            normal_lattice: OnceLock::new(),
        };
        let _ = g.store.set(Store {
            perms,
            index,
            table: Some(table),
            inv,
        });
        g
    }

    /// Table-backed group. `table[a * order + b]` is the id of `a·b`; id 0
    /// must be the identity. An empty `gens` asks for a generating set to be
    /// chosen.
    pub fn from_table(order: usize, table: Vec<Elem>, gens: Vec<Elem>, limits: &Limits) -> Result<Group> {
        if order == 0 || table.len() != order * order {
            return Err(GpiError::Description(format!(
                "table of length {} does not describe a group of order {order}",
                table.len()
            )));
        }
        if order > limits.max_table {
            return Err(GpiError::TooLarge {
                what: "table order",
                size: order as u128,
                limit: limits.max_table as u128,
            });
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(GpiError::Description("id 0 is not the identity".into()));
            }
        }
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            let mut seen = vec![false; order];
            for b in 0..order {
                let c = table[a * order + b] as usize;
                if c >= order || seen[c] {
                    return Err(GpiError::Description(format!("row {a} is not a permutation")));
                }
                seen[c] = true;
                if c == 0 {
                    inv[a] = b as Elem;
                }
            }
        }
        if order <= 64 {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b] as usize;
                    for c in 0..order {
                        let bc = table[b * order + c] as usize;
                        if table[ab * order + c] != table[a * order + bc] {
                            return Err(GpiError::Description("table is not associative".into()));
                        }
                    }
                }
            }
        }
        let g = Group {
            backend: Backend::Table,
            order,
            limits: limits.clone(),
            store: OnceLock::new(),
            gen_ids: OnceLock::new(),
            element_orders: OnceLock::new(),
            classes: OnceLock::new(),
            normal_lattice: OnceLock::new(),
        };
        let _ = g.store.set(Store {
            perms: Vec::new(),
            index: HashMap::new(),
            table: Some(table),
            inv,
        });
        let gens = if gens.is_empty() {
            g.greedy_generators()
        } else {
            if gens.iter().any(|&x| x as usize >= order) {
                return Err(GpiError::Description("generator id out of range".into()));
            }
            if g.subgroup_generated(&gens).order() != order {
                return Err(GpiError::Description(
                    "listed generators do not generate the table group".into(),
                ));
            }
            gens
        };
        let _ = g.gen_ids.set(gens);
        Ok(g)
    }

    fn greedy_generators(&self) -> Vec<Elem> {
        let mut sub = self.trivial();
        for x in 0..self.order as Elem {
            if sub.order() == self.order {
                break;
            }
            if !sub.contains(x) {
                sub = self.extend(&sub, &[x]);
            }
        }
        sub.generators().to_vec()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn is_perm_backed(&self) -> bool {
        matches!(self.backend, Backend::Perm { .. })
    }

    /// Degree of the permutation representation used for output: the given
    /// degree for permutation groups, the order (regular action) for tables.
    pub fn degree(&self) -> usize {
        match &self.backend {
            Backend::Perm { degree, .. } => *degree,
            Backend::Table => self.order,
        }
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order as Elem
    }

    fn store(&self) -> &Store {
        self.store.get_or_init(|| self.enumerate())
    }

    fn enumerate(&self) -> Store {
        let Backend::Perm { degree, gens } = &self.backend else {
            unreachable!("table groups are materialized at construction");
        };
        let id = Perm::identity(*degree);
        let mut seen: HashSet<Perm> = HashSet::with_capacity(self.order);
        seen.insert(id.clone());
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            for g in gens {
                let y = x.compose_unchecked(g);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        debug_assert_eq!(queue.len(), self.order, "closure disagrees with stabilizer chain");
        let mut perms = queue;
        perms.sort();
        let index: HashMap<Perm, Elem> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as Elem))
            .collect();
        let inv: Vec<Elem> = perms.iter().map(|p| index[&p.inverse()]).collect();
        let n = perms.len();
        let table = (n <= self.limits.mul_table).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &perms {
                for b in &perms {
                    t.push(index[&a.compose_unchecked(b)]);
                }
            }
            t
        });
        Store {
            perms,
            index,
            table,
            inv,
        }
    }

    /// Number of elements reached by closing the generators under products,
    /// counted independently of the stabilizer chain.
    pub fn enumerated_count(&self) -> usize {
        match &self.backend {
            Backend::Perm { .. } => self.store().perms.len(),
            Backend::Table => self.order,
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let s = self.store();
        match &s.table {
            Some(t) => t[a as usize * self.order + b as usize],
            None => s.index[&s.perms[a as usize].compose_unchecked(&s.perms[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.store().inv[a as usize]
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn generators(&self) -> &[Elem] {
        self.gen_ids.get_or_init(|| match &self.backend {
            Backend::Perm { gens, .. } => {
                let s = self.store();
                gens.iter().map(|p| s.index[p]).collect()
            }
            Backend::Table => unreachable!("table generators are set at construction"),
        })
    }

    /// The permutation realizing `x`: itself for permutation groups, the right
    /// regular action `y ↦ y·x` for table groups.
    pub fn perm_of(&self, x: Elem) -> Perm {
        match &self.backend {
            Backend::Perm { .. } => self.store().perms[x as usize].clone(),
            Backend::Table => Perm::from_images(self.elements().map(|y| self.mul(y, x)).collect())
                .expect("rows of a group table are permutations"),
        }
    }

    /// Id of a permutation, for permutation-backed groups.
    pub fn id_of(&self, p: &Perm) -> Option<Elem> {
        match &self.backend {
            Backend::Perm { degree, .. } if *degree == p.degree() => self.store().index.get(p).copied(),
            Backend::Perm { .. } => None,
            Backend::Table => {
                if p.degree() != self.order {
                    return None;
                }
                let x = p.apply(0) as Elem;
                (self.perm_of(x) == *p).then_some(x)
            }
        }
    }

    pub fn element_order(&self, x: Elem) -> u32 {
        self.element_orders()[x as usize]
    }

    pub fn element_orders(&self) -> &[u32] {
        self.element_orders.get_or_init(|| {
            self.elements()
                .map(|x| {
                    let mut k = 1;
                    let mut y = x;
                    while y != self.identity() {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| {
            let n = self.order;
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for x in self.elements() {
                if class_of[x as usize] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                class_of[x as usize] = id;
                let mut members = vec![x];
                let mut head = 0;
                while head < members.len() {
                    let y = members[head];
                    head += 1;
                    for &g in self.generators() {
                        let z = self.conj(y, g);
                        if class_of[z as usize] == u32::MAX {
                            class_of[z as usize] = id;
                            members.push(z);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(members);
            }
            Classes { classes, class_of }
        })
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::trivial(self.order)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts(self.elements().collect(), self.order, self.generators().to_vec())
    }

    /// Smallest subgroup containing `elems`.
    pub fn subgroup_generated(&self, elems: &[Elem]) -> Subgroup {
        self.extend(&self.trivial(), elems)
    }

    /// `⟨base, extra⟩`, grown one generator at a time by adding whole right
    /// cosets of the current subgroup.
    pub fn extend(&self, base: &Subgroup, extra: &[Elem]) -> Subgroup {
        let mut cur = base.clone();
        for &x in extra {
            if !cur.contains(x) {
                cur = self.extend_one(&cur, x);
            }
        }
        cur
    }

    fn extend_one(&self, base: &Subgroup, x: Elem) -> Subgroup {
        let mut members = base.members().clone();
        let mut elements = base.elements().to_vec();
        let mut gens = base.generators().to_vec();
        gens.push(x);
        let mut reps = vec![self.identity()];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head];
            head += 1;
            for &s in &gens {
                let y = self.mul(r, s);
                if !members.contains(y as usize) {
                    for &b in base.elements() {
                        let z = self.mul(b, y);
                        members.insert(z as usize);
                        elements.push(z);
                    }
                    reps.push(y);
                }
            }
        }
        elements.sort_unstable();
        Subgroup::from_sorted(elements, members, gens)
    }

    /// Validates that `elems` is a subgroup and wraps it.
    pub fn subgroup_from_elements(&self, elems: &[Elem]) -> Result<Subgroup> {
        if elems.iter().any(|&x| x as usize >= self.order) {
            return Err(GpiError::NotSubgroup);
        }
        let generated = self.subgroup_generated(elems);
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if generated.elements() != sorted.as_slice() {
            return Err(GpiError::NotSubgroup);
        }
        Ok(generated)
    }

    /// Wraps an element set already known to be a subgroup, choosing generators greedily.
    pub(crate) fn subgroup_from_closed(&self, mut elems: Vec<Elem>) -> Subgroup {
        elems.sort_unstable();
        let mut sub = self.trivial();
        for &x in &elems {
            if sub.order() == elems.len() {
                break;
            }
            if !sub.contains(x) {
                sub = self.extend_one(&sub, x);
            }
        }
        debug_assert_eq!(sub.elements(), elems.as_slice());
        sub
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let elems: Vec<Elem> = a.elements().iter().copied().filter(|&x| b.contains(x)).collect();
        self.subgroup_from_closed(elems)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if a.order() >= b.order() {
            self.extend(a, b.generators())
        } else {
            self.extend(b, a.generators())
        }
    }

    /// `H^g`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: Elem) -> Subgroup {
        let elems: Vec<Elem> = h.elements().iter().map(|&x| self.conj(x, g)).collect();
        let gens: Vec<Elem> = h.generators().iter().map(|&x| self.conj(x, g)).collect();
        let mut sorted = elems;
        sorted.sort_unstable();
        Subgroup::from_parts(sorted, self.order, gens)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators()
            .iter()
            .all(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn is_subgroup_normal_in(&self, h: &Subgroup, k: &Subgroup) -> bool {
        h.is_subset(k)
            && k.generators()
                .iter()
                .all(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
    }
}
