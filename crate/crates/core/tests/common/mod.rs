//! Brute-force oracles. Everything here works from the multiplication table
//! alone and shares no code paths with the library algorithms it checks.
#![allow(dead_code)]

pub mod checks;
pub mod inheritance;

use std::collections::{BTreeSet, HashMap, HashSet};

use gpi_core::harness::catalog::{build_catalog, CatalogEntry};
use gpi_core::{Elem, Group, Limits, Subgroup};

pub type Set = Vec<u32>;

pub struct Brute {
    pub n: usize,
    e: u32,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

pub fn primes_of(mut n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut d = 2;
    while d * d <= n {
        while n % d == 0 {
            out.insert(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

pub fn is_pi(n: u64, pi: &BTreeSet<u64>) -> bool {
    primes_of(n).is_subset(pi)
}

impl Brute {
    pub fn new(g: &Group) -> Self {
        let n = g.order();
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                mul.push(g.mul(a, b));
            }
        }
        Self::from_table(n, mul)
    }

    pub fn from_table(n: usize, mul: Vec<u32>) -> Self {
        let e = (0..n as u32)
            .find(|&x| (0..n as u32).all(|y| mul[x as usize * n + y as usize] == y))
            .expect("identity");
        let inv = (0..n as u32)
            .map(|x| {
                (0..n as u32)
                    .find(|&y| mul[x as usize * n + y as usize] == e)
                    .expect("inverse")
            })
            .collect();
        Brute { n, e, mul, inv }
    }

    pub fn m(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.m(self.m(self.inv(g), x), g)
    }

    pub fn identity(&self) -> u32 {
        self.e
    }

    pub fn order_of(&self, x: u32) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity() {
            y = self.m(y, x);
            k += 1;
        }
        k
    }

    /// Closure of `gens`, one generator at a time as a union of right cosets
    /// of the subgroup built so far.
    pub fn closure(&self, gens: &[u32]) -> Set {
        let mut member = vec![false; self.n];
        let e = self.identity();
        member[e as usize] = true;
        let mut elems = vec![e];
        let mut used: Vec<u32> = Vec::new();
        for &g in gens {
            if member[g as usize] {
                continue;
            }
            used.push(g);
            let base = elems.clone();
            let mut reps = vec![g];
            let mut i = 0;
            for &h in &base {
                let y = self.m(h, g);
                member[y as usize] = true;
                elems.push(y);
            }
            while i < reps.len() {
                let r = reps[i];
                i += 1;
                for &s in &used {
                    let c = self.m(r, s);
                    if !member[c as usize] {
                        reps.push(c);
                        for &h in &base {
                            let y = self.m(h, c);
                            member[y as usize] = true;
                            elems.push(y);
                        }
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    pub fn join(&self, a: &Set, b: &Set) -> Set {
        let gens: Vec<u32> = a.iter().chain(b.iter()).copied().collect();
        self.closure(&gens)
    }

    fn close_under_joins(&self, atoms: Vec<Set>) -> Vec<Set> {
        let mut seen: HashSet<Set> = HashSet::new();
        let trivial = vec![self.identity()];
        seen.insert(trivial.clone());
        let mut all = vec![trivial];
        for a in &atoms {
            if seen.insert(a.clone()) {
                all.push(a.clone());
            }
        }
        let mut i = 0;
        while i < all.len() {
            for a in &atoms {
                let j = self.join(&all[i], a);
                if seen.insert(j.clone()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        all
    }

    pub fn all_subgroups(&self) -> Vec<Set> {
        let atoms: Vec<Set> = (0..self.n as u32)
            .map(|x| self.closure(&[x]))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        self.close_under_joins(atoms)
    }

    pub fn is_normal(&self, s: &Set) -> bool {
        let member = self.members(s);
        (0..self.n as u32).all(|g| s.iter().all(|&x| member[self.conj(x, g) as usize]))
    }

    pub fn members(&self, s: &Set) -> Vec<bool> {
        let mut v = vec![false; self.n];
        for &x in s {
            v[x as usize] = true;
        }
        v
    }

    pub fn normal_subgroups(&self) -> Vec<Set> {
        let atoms: Vec<Set> = (0..self.n as u32)
            .map(|x| {
                let class: Vec<u32> = (0..self.n as u32).map(|g| self.conj(x, g)).collect();
                self.closure(&class)
            })
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        self.close_under_joins(atoms)
    }

    /// Every maximal chain of normal subgroups from 1 to G, as indices into
    /// `normals` (which must start with 1 and end with G).
    pub fn chief_chains(&self, normals: &[Set]) -> Vec<Vec<usize>> {
        let subset = |a: &Set, b: &Set| a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok());
        let covers: Vec<Vec<usize>> = (0..normals.len())
            .map(|i| {
                (0..normals.len())
                    .filter(|&j| {
                        subset(&normals[i], &normals[j])
                            && !normals
                                .iter()
                                .any(|l| subset(&normals[i], l) && subset(l, &normals[j]))
                    })
                    .collect()
            })
            .collect();
        fn walk(i: usize, covers: &[Vec<usize>], top: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == top {
                out.push(path.clone());
                return;
            }
            for &j in &covers[i] {
                path.push(j);
                walk(j, covers, top, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        walk(0, &covers, normals.len() - 1, &mut vec![0], &mut out);
        out
    }

    pub fn all_chief_series(&self) -> Vec<Vec<Set>> {
        let normals = self.normal_subgroups();
        self.chief_chains(&normals)
            .into_iter()
            .map(|c| c.into_iter().map(|i| normals[i].clone()).collect())
            .collect()
    }

    /// Coset labels of the normal subgroup `k`.
    pub fn cosets(&self, k: &Set) -> (Vec<usize>, Vec<u32>) {
        let mut label = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n as u32 {
            if label[x as usize] == usize::MAX {
                let id = reps.len();
                reps.push(x);
                for &y in k {
                    label[self.m(x, y) as usize] = id;
                }
            }
        }
        (label, reps)
    }

    /// The index condition computed literally in `G/K`.
    pub fn factor_ok(&self, h: &Set, k: &Set, m: &Set) -> bool {
        let (label, reps) = self.cosets(k);
        self.factor_ok_in(h, &label, &reps, m)
    }

    fn factor_ok_in(&self, h: &Set, label: &[usize], reps: &[u32], m: &Set) -> bool {
        let q = reps.len();
        let h_img: BTreeSet<usize> = h.iter().map(|&x| label[x as usize]).collect();
        let m_img: BTreeSet<usize> = m.iter().map(|&x| label[x as usize]).collect();
        let a: Vec<usize> = h_img.intersection(&m_img).copied().collect();
        let a_set: HashSet<usize> = a.iter().copied().collect();
        let normalizer = (0..q)
            .filter(|&c| {
                let r = reps[c];
                a.iter().all(|&s| a_set.contains(&label[self.conj(reps[s], r) as usize]))
            })
            .count();
        is_pi((q / normalizer) as u64, &primes_of(a.len() as u64))
    }

    pub fn series_ok(&self, h: &Set, series: &[Set]) -> bool {
        series.windows(2).all(|w| self.factor_ok(h, &w[0], &w[1]))
    }

    /// Quotient by a normal subgroup as a new table.
    pub fn quotient(&self, k: &Set) -> (Brute, Vec<usize>) {
        let (label, reps) = self.cosets(k);
        let q = reps.len();
        let mut mul = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                mul.push(label[self.m(a, b) as usize] as u32);
            }
        }
        (Brute::from_table(q, mul), label)
    }

    /// Largest normal subgroup whose order has all primes in (or outside) `p`.
    pub fn largest_normal(&self, keep: impl Fn(usize) -> bool) -> Set {
        self.normal_subgroups()
            .into_iter()
            .filter(|s| keep(s.len()))
            .max_by_key(|s| s.len())
            .unwrap()
    }

    /// Length of the upper p-series computed by repeated quotients.
    pub fn p_length(&self, p: u64) -> usize {
        let is_p_power = |n: usize| primes_of(n as u64).iter().all(|&q| q == p);
        let coprime = |n: usize| n as u64 % p != 0;
        let mut cur = Brute::from_table(self.n, self.mul.clone());
        let mut len = 0;
        loop {
            let o = cur.largest_normal(coprime);
            let (q, _) = cur.quotient(&o);
            if q.n == 1 {
                return len;
            }
            let op = q.largest_normal(is_p_power);
            assert!(op.len() > 1, "group is not p-soluble");
            len += 1;
            cur = q.quotient(&op).0;
        }
    }

    /// Upper central series limit by the commutator criterion.
    pub fn hypercenter(&self) -> Set {
        let mut z = vec![self.identity()];
        loop {
            let member = self.members(&z);
            let next: Set = (0..self.n as u32)
                .filter(|&x| {
                    (0..self.n as u32).all(|g| {
                        let c = self.m(self.m(self.inv(x), self.inv(g)), self.m(x, g));
                        member[c as usize]
                    })
                })
                .collect();
            if next.len() == z.len() {
                return z;
            }
            z = next;
        }
    }

    pub fn fitting(&self) -> Set {
        let normals = self.normal_subgroups();
        let prime_power: Vec<&Set> = normals.iter().filter(|s| primes_of(s.len() as u64).len() == 1).collect();
        let gens: Vec<u32> = prime_power.iter().flat_map(|s| s.iter().copied()).collect();
        self.closure(&gens)
    }

    pub fn socle(&self) -> Set {
        let normals = self.normal_subgroups();
        let minimal: Vec<&Set> = normals
            .iter()
            .filter(|s| s.len() > 1)
            .filter(|s| {
                !normals
                    .iter()
                    .any(|t| t.len() > 1 && t.len() < s.len() && t.iter().all(|x| s.binary_search(x).is_ok()))
            })
            .collect();
        let gens: Vec<u32> = minimal.iter().flat_map(|s| s.iter().copied()).collect();
        self.closure(&gens)
    }
}

/// Decides the property for any H by walking every chief series.
pub struct SeriesOracle<'b> {
    b: &'b Brute,
    pub normals: Vec<Set>,
    pub chains: Vec<Vec<usize>>,
    cosets: Vec<(Vec<usize>, Vec<u32>)>,
}

pub struct OracleVerdict {
    pub witness: bool,
    /// Normal subgroups reachable from 1 through passing factors.
    pub reachable: usize,
}

impl<'b> SeriesOracle<'b> {
    pub fn new(b: &'b Brute) -> Self {
        let normals = b.normal_subgroups();
        let chains = b.chief_chains(&normals);
        let cosets = normals.iter().map(|k| b.cosets(k)).collect();
        SeriesOracle { b, normals, chains, cosets }
    }

    pub fn verdict(&self, h: &Set) -> OracleVerdict {
        let mut memo: HashMap<(usize, usize), bool> = HashMap::new();
        let mut reach = BTreeSet::new();
        let mut witness = false;
        for chain in &self.chains {
            reach.insert(chain[0]);
            let mut all = true;
            for w in chain.windows(2) {
                let ok = *memo.entry((w[0], w[1])).or_insert_with(|| {
                    let (label, reps) = &self.cosets[w[0]];
                    self.b.factor_ok_in(h, label, reps, &self.normals[w[1]])
                });
                if !ok {
                    all = false;
                    break;
                }
                reach.insert(w[1]);
            }
            witness |= all;
        }
        OracleVerdict {
            witness,
            reachable: reach.len(),
        }
    }
}

pub fn catalog_groups(max_order: usize) -> Vec<(CatalogEntry, Group)> {
    let limits = Limits::default();
    build_catalog()
        .into_iter()
        .filter(|e| e.order <= max_order)
        .map(|e| {
            let g = e.build(&limits).unwrap();
            (e, g)
        })
        .collect()
}

pub fn to_subgroup(g: &Group, s: &Set) -> Subgroup {
    let elems: Vec<Elem> = s.clone();
    g.subgroup_from_elements(&elems).expect("oracle sets are subgroups")
}

pub fn is_prime_power(n: usize) -> Option<u64> {
    let ps = primes_of(n as u64);
    (ps.len() == 1).then(|| *ps.iter().next().unwrap())
}
