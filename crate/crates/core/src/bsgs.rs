//! Deterministic Schreier-Sims: a base and strong generating set for a
//! permutation group, used to get the group order without enumerating it.

use crate::perm::Perm;

struct Level {
    base: usize,
    /// Strong generators first introduced at this level; the level's group is
    /// generated by these together with those of every deeper level.
    gens: Vec<Perm>,
    /// `transversal[x]` maps the base point to `x`, when `x` is in the orbit.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn orbit_len(&self) -> usize {
        self.transversal.iter().filter(|t| t.is_some()).count()
    }
}

/// A stabilizer chain built by Schreier-Sims.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            let (residue, depth) = chain.sift(g, 0);
            if !residue.is_identity() {
                chain.add_generator(depth, residue);
            }
        }
        chain.complete();
        chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit_len() as u128)
            .product()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.sift(p, 0).0.is_identity()
    }

    /// Sifts `p` from `start`; returns the residue and the level where sifting stopped.
    fn sift(&self, p: &Perm, start: usize) -> (Perm, usize) {
        let mut h = p.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = h.apply(level.base);
            match &level.transversal[beta] {
                Some(u) => h = h.compose_unchecked(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn add_generator(&mut self, depth: usize, g: Perm) {
        if depth == self.levels.len() {
            let base = g.first_moved().expect("non-identity residue moves a point");
            let mut transversal = vec![None; self.degree];
            transversal[base] = Some(Perm::identity(self.degree));
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal,
            });
        }
        self.levels[depth].gens.push(g);
        for j in 0..=depth {
            self.rebuild_orbit(j);
        }
    }

    fn level_gens(&self, j: usize) -> Vec<Perm> {
        self.levels[j..].iter().flat_map(|l| l.gens.iter().cloned()).collect()
    }

    fn rebuild_orbit(&mut self, j: usize) {
        let gens = self.level_gens(j);
        let level = &mut self.levels[j];
        let mut queue: Vec<usize> = level
            .transversal
            .iter()
            .enumerate()
            .filter_map(|(i, t)| t.as_ref().map(|_| i))
            .collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for g in &gens {
                let y = g.apply(x);
                if level.transversal[y].is_none() {
                    let u = level.transversal[x].as_ref().unwrap().compose_unchecked(g);
                    level.transversal[y] = Some(u);
                    queue.push(y);
                }
            }
        }
    }

    /// Repeats until every Schreier generator of every level sifts through
    /// the levels below it.
    fn complete(&mut self) {
        'restart: loop {
            for j in (0..self.levels.len()).rev() {
                let gens = self.level_gens(j);
                let orbit: Vec<usize> = self.levels[j]
                    .transversal
                    .iter()
                    .enumerate()
                    .filter_map(|(i, t)| t.as_ref().map(|_| i))
                    .collect();
                for &beta in &orbit {
                    for s in &gens {
                        let level = &self.levels[j];
                        let u_beta = level.transversal[beta].as_ref().unwrap();
                        let u_image = level.transversal[s.apply(beta)].as_ref().unwrap();
                        let schreier = u_beta.compose_unchecked(s).compose_unchecked(&u_image.inverse());
                        if schreier.is_identity() {
                            continue;
                        }
                        let (residue, at) = self.sift(&schreier, j + 1);
                        if !residue.is_identity() {
                            self.add_generator(at, residue);
                            continue 'restart;
                        }
                    }
                }
            }
            break;
        }
    }
}
