//! Quotients, standalone copies of subgroups, and semidirect products.

use crate::error::{GpiError, Result};
use crate::group::{Elem, Group, Limits};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// `G/N` together with the projection `G → G/N`.
#[derive(Debug)]
pub struct Quotient {
    pub group: Group,
    /// `projection[g]` is the image of `g`.
    pub projection: Vec<Elem>,
}

impl Quotient {
    #[inline]
    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x as usize]
    }

    /// Image `HN/N` of a subgroup of the ambient group.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = h.generators().iter().map(|&x| self.project(x)).collect();
        self.group.subgroup_generated(&gens)
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, ambient: &Group, s: &Subgroup) -> Subgroup {
        let elems: Vec<Elem> = ambient
            .elements()
            .filter(|&g| s.contains(self.project(g)))
            .collect();
        ambient.subgroup_from_closed(elems)
    }
}

/// `G/N` as a permutation group on the right cosets of `N`.
///
/// Falls back to a table-backed quotient only when the index exceeds the
/// degree ceiling.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<Quotient> {
    if !g.is_normal(n) {
        return Err(GpiError::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![u32::MAX; order];
    let mut reps: Vec<Elem> = Vec::new();
    for x in g.elements() {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let label = reps.len() as u32;
        reps.push(x);
        for &m in n.elements() {
            coset_of[g.mul(m, x) as usize] = label;
        }
    }
    let index = reps.len();
    let limits = g.limits();

    let action = |x: Elem| -> Vec<u32> {
        reps.iter()
            .map(|&r| coset_of[g.mul(r, x) as usize])
            .collect()
    };

    if index <= limits.mul_table {
        let gens: Vec<Perm> = g
            .generators()
            .iter()
            .map(|&x| Perm::from_images(action(x)).expect("coset action is a permutation"))
            .collect();
        let elements: Vec<Perm> = reps
            .iter()
            .map(|&r| Perm::from_images(action(r)).expect("coset action is a permutation"))
            .collect();
        let group = Group::from_known_elements(
            index,
            gens,
            elements,
            |a, b| coset_of[g.mul(reps[a], reps[b]) as usize] as usize,
            limits,
        );
        let rep_image: Vec<Elem> = (0..index)
            .map(|c| group.id_of(&Perm::from_images(action(reps[c])).unwrap()).unwrap())
            .collect();
        let projection = coset_of.iter().map(|&c| rep_image[c as usize]).collect();
        Ok(Quotient { group, projection })
    } else if index <= limits.max_degree {
        let gens: Vec<Perm> = g
            .generators()
            .iter()
            .map(|&x| Perm::from_images(action(x)).expect("coset action is a permutation"))
            .collect();
        let group = Group::from_perms(index, gens, limits)?;
        let rep_image: Vec<Elem> = reps
            .iter()
            .map(|&r| group.id_of(&Perm::from_images(action(r)).unwrap()).unwrap())
            .collect();
        let projection = coset_of.iter().map(|&c| rep_image[c as usize]).collect();
        Ok(Quotient { group, projection })
    } else {
        if index > limits.max_table {
            return Err(GpiError::TooLarge {
                what: "quotient order",
                size: index as u128,
                limit: limits.max_table as u128,
            });
        }
        let mut table = Vec::with_capacity(index * index);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[g.mul(a, b) as usize]);
            }
        }
        let gens = g.generators().iter().map(|&x| coset_of[x as usize]).collect();
        let group = Group::from_table(index, table, gens, limits)?;
        Ok(Quotient {
            group,
            projection: coset_of,
        })
    }
}

/// A subgroup rebuilt as a standalone group, with the embedding back into
/// the ambient group.
#[derive(Debug)]
pub struct Embedded {
    pub group: Group,
    /// `embedding[i]` is the ambient id of local element `i`.
    pub embedding: Vec<Elem>,
    local_of: Vec<u32>,
}

impl Embedded {
    pub fn lift_elem(&self, x: Elem) -> Elem {
        self.embedding[x as usize]
    }

    /// Local subgroup mapped into the ambient group.
    pub fn lift(&self, ambient: &Group, s: &Subgroup) -> Subgroup {
        let mut elems: Vec<Elem> = s.elements().iter().map(|&x| self.lift_elem(x)).collect();
        elems.sort_unstable();
        let gens = s.generators().iter().map(|&x| self.lift_elem(x)).collect();
        crate::subgroup::Subgroup::from_parts(elems, ambient.order(), gens)
    }

    /// Local id of an ambient element, if it lies in the subgroup.
    pub fn local_elem(&self, x: Elem) -> Option<Elem> {
        match self.local_of[x as usize] {
            u32::MAX => None,
            i => Some(i),
        }
    }

    /// Ambient subgroup contained in the embedded one, in local ids.
    pub fn pull(&self, s: &Subgroup) -> Option<Subgroup> {
        let gens: Option<Vec<Elem>> = s.generators().iter().map(|&x| self.local_elem(x)).collect();
        let sub = self.group.subgroup_generated(&gens?);
        (sub.order() == s.order()).then_some(sub)
    }
}

/// Rebuilds a subgroup as its own group (faithful on the same points for
/// permutation groups, a sub-table otherwise).
pub fn restrict(g: &Group, s: &Subgroup) -> Result<Embedded> {
    let limits = g.limits();
    let (group, embedding) = if g.is_perm_backed() && s.order() > limits.mul_table {
        let perms: Vec<Perm> = s.generators().iter().map(|&x| g.perm_of(x)).collect();
        let local = Group::from_perms(g.degree(), perms, limits)?;
        let embedding: Vec<Elem> = local
            .elements()
            .map(|i| g.id_of(&local.perm_of(i)).expect("subgroup element lies in ambient group"))
            .collect();
        (local, embedding)
    } else if g.is_perm_backed() {
        let mut pos = vec![u32::MAX; g.order()];
        for (i, &x) in s.elements().iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        let gens: Vec<Perm> = s.generators().iter().map(|&x| g.perm_of(x)).collect();
        let elements: Vec<Perm> = s.elements().iter().map(|&x| g.perm_of(x)).collect();
        let elems = s.elements();
        let local = Group::from_known_elements(
            g.degree(),
            gens,
            elements,
            |a, b| pos[g.mul(elems[a], elems[b]) as usize] as usize,
            limits,
        );
        let embedding: Vec<Elem> = local
            .elements()
            .map(|i| g.id_of(&local.perm_of(i)).expect("subgroup element lies in ambient group"))
            .collect();
        (local, embedding)
    } else {
        let mut pos = vec![u32::MAX; g.order()];
        for (i, &x) in s.elements().iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        let n = s.order();
        let mut table = Vec::with_capacity(n * n);
        for &a in s.elements() {
            for &b in s.elements() {
                table.push(pos[g.mul(a, b) as usize]);
            }
        }
        let gens: Vec<Elem> = s.generators().iter().map(|&x| pos[x as usize]).collect();
        let local = Group::from_table(n, table, gens, limits)?;
        (local, s.elements().to_vec())
    };
    let mut local_of = vec![u32::MAX; g.order()];
    for (i, &x) in embedding.iter().enumerate() {
        local_of[x as usize] = i as u32;
    }
    Ok(Embedded {
        group,
        embedding,
        local_of,
    })
}

/// Extends images of `n`'s generators to an automorphism of `n`, given as
/// the image of every element. Fails if the assignment is not a
/// well-defined bijective homomorphism.
pub fn extend_to_automorphism(n: &Group, images: &[Elem]) -> Result<Vec<Elem>> {
    let gens = n.generators();
    if images.len() != gens.len() {
        return Err(GpiError::InvalidAction(format!(
            "{} generator images given for {} generators",
            images.len(),
            gens.len()
        )));
    }
    if images.iter().any(|&x| x as usize >= n.order()) {
        return Err(GpiError::InvalidAction("generator image out of range".into()));
    }
    let mut map = vec![u32::MAX; n.order()];
    map[0] = 0;
    let mut queue = vec![0 as Elem];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (j, &s) in gens.iter().enumerate() {
            let y = n.mul(x, s);
            let fy = n.mul(map[x as usize], images[j]);
            match map[y as usize] {
                u32::MAX => {
                    map[y as usize] = fy;
                    queue.push(y);
                }
                prev if prev != fy => {
                    return Err(GpiError::InvalidAction(format!(
                        "images of generators do not define a homomorphism (conflict at generator {j})"
                    )));
                }
                _ => {}
            }
        }
    }
    let mut seen = vec![false; n.order()];
    for &y in &map {
        if seen[y as usize] {
            return Err(GpiError::InvalidAction("homomorphism is not injective".into()));
        }
        seen[y as usize] = true;
    }
    Ok(map)
}

/// `N ⋊ Q` with product `(n1, q1)(n2, q2) = (n1 · q1(n2), q1 q2)`.
///
/// `action[i]` lists the images of `N`'s generators under the automorphism
/// attached to `Q`'s `i`-th generator. The element `(n, q)` gets id
/// `n·|Q| + q`, so `N` embeds as the ids divisible by `|Q|`.
pub fn semidirect_product(n: &Group, q: &Group, action: &[Vec<Elem>], limits: &Limits) -> Result<Group> {
    let qgens = q.generators();
    if action.len() != qgens.len() {
        return Err(GpiError::InvalidAction(format!(
            "{} automorphisms given for {} quotient generators",
            action.len(),
            qgens.len()
        )));
    }
    let order = n.order() * q.order();
    if order > limits.max_table {
        return Err(GpiError::TooLarge {
            what: "semidirect product order",
            size: order as u128,
            limit: limits.max_table as u128,
        });
    }
    let auts: Vec<Vec<Elem>> = action
        .iter()
        .enumerate()
        .map(|(i, imgs)| {
            extend_to_automorphism(n, imgs).map_err(|e| {
                GpiError::InvalidAction(format!("quotient generator {i}: {e}"))
            })
        })
        .collect::<Result<_>>()?;

    // Q → Aut(N), q ↦ φ(q), with φ(q s) = φ(q) ∘ φ(s).
    let nn = n.order();
    let mut phi: Vec<Option<Vec<Elem>>> = vec![None; q.order()];
    phi[0] = Some((0..nn as Elem).collect());
    let mut queue = vec![0 as Elem];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (i, &s) in qgens.iter().enumerate() {
            let y = q.mul(x, s);
            let fx = phi[x as usize].as_ref().unwrap();
            let composed: Vec<Elem> = (0..nn).map(|m| fx[auts[i][m] as usize]).collect();
            match &phi[y as usize] {
                None => {
                    phi[y as usize] = Some(composed);
                    queue.push(y);
                }
                Some(prev) if *prev != composed => {
                    return Err(GpiError::InvalidAction(format!(
                        "action is not a homomorphism: relation violated at quotient generator {i} (pair ({x}, {s}))"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let phi: Vec<Vec<Elem>> = phi.into_iter().map(|p| p.expect("Q is generated by its generators")).collect();

    let qq = q.order();
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (n1, q1) = (a / qq, a % qq);
        for b in 0..order {
            let (n2, q2) = (b / qq, b % qq);
            let nprod = n.mul(n1 as Elem, phi[q1][n2]);
            let qprod = q.mul(q1 as Elem, q2 as Elem);
            table.push(nprod * qq as Elem + qprod);
        }
    }
    let mut gens: Vec<Elem> = n.generators().iter().map(|&x| x * qq as Elem).collect();
    gens.extend(qgens.iter().copied());
    Group::from_table(order, table, gens, limits)
}

/// The copy of `N` inside `semidirect_product(N, Q, ..)`.
pub fn semidirect_normal_part(product: &Group, n_order: usize, q_order: usize) -> Subgroup {
    let elems: Vec<Elem> = (0..n_order).map(|m| (m * q_order) as Elem).collect();
    product.subgroup_from_closed(elems)
}
