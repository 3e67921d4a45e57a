//! Recipes for standard families of groups, as descriptions.

use crate::desc::{Cycles, GroupDesc};
use crate::perm::Perm;

fn cycle(points: impl IntoIterator<Item = usize>) -> Vec<usize> {
    points.into_iter().collect()
}

/// Cyclic group of order `n` on `n` points.
pub fn cyclic(n: usize) -> GroupDesc {
    abelian(&[n])
}

/// Direct product of cyclic groups of the given orders, on disjoint points.
pub fn abelian(orders: &[usize]) -> GroupDesc {
    let degree = orders.iter().sum::<usize>().max(1);
    let mut start = 0;
    let mut gens = Vec::new();
    for &n in orders {
        if n > 1 {
            gens.push(vec![cycle(start..start + n)]);
        }
        start += n;
    }
    GroupDesc::perm(degree, gens)
}

pub fn elementary_abelian(p: usize, rank: usize) -> GroupDesc {
    abelian(&vec![p; rank])
}

pub fn symmetric(n: usize) -> GroupDesc {
    if n < 2 {
        return GroupDesc::perm(1, vec![]);
    }
    GroupDesc::perm(n, vec![vec![vec![0, 1]], vec![cycle(0..n)]])
}

/// Alternating group generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> GroupDesc {
    if n < 3 {
        return GroupDesc::perm(n.max(1), vec![]);
    }
    GroupDesc::perm(n, (2..n).map(|i| vec![vec![0, 1, i]]).collect())
}

/// Dihedral group of order `2m` acting on the vertices of an `m`-gon, `m ≥ 3`.
pub fn dihedral(order: usize) -> GroupDesc {
    let m = order / 2;
    assert!(m >= 3 && order % 2 == 0, "dihedral order must be even and at least 6");
    let reflection: Cycles = (1..m).filter(|&i| i < m - i).map(|i| vec![i, m - i]).collect();
    GroupDesc::perm(m, vec![vec![cycle(0..m)], reflection])
}

/// Regular representation of `⟨a, b | a^m, b² = a^t, b⁻¹ab = a^r⟩`,
/// elements `a^i b^j` numbered `i + m·j`.
pub fn metacyclic_two(m: usize, r: usize, t: usize) -> GroupDesc {
    let n = 2 * m;
    let mul = |x: usize, y: usize| -> usize {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let twisted = if j == 1 { k * r } else { k };
        let extra = if j == 1 && l == 1 { t } else { 0 };
        (i + twisted + extra) % m + m * ((j + l) % 2)
    };
    let right = |g: usize| -> Perm {
        Perm::from_images((0..n).map(|x| mul(x, g) as u32).collect()).expect("regular action")
    };
    GroupDesc::from_perms(n, &[right(1), right(m)])
}

/// Generalized quaternion group of order `2^k`, `k ≥ 3`.
pub fn quaternion(order: usize) -> GroupDesc {
    let m = order / 2;
    metacyclic_two(m, m - 1, m / 2)
}

/// Semidihedral group of order `2^k`, `k ≥ 4`: `b a b = a^{m/2 - 1}`.
pub fn semidihedral(order: usize) -> GroupDesc {
    let m = order / 2;
    metacyclic_two(m, m / 2 - 1, 0)
}

/// Modular group of order `2^k`, `k ≥ 4`: `b a b = a^{m/2 + 1}`.
pub fn modular(order: usize) -> GroupDesc {
    let m = order / 2;
    metacyclic_two(m, m / 2 + 1, 0)
}

/// Direct product of permutation descriptions on disjoint point sets.
pub fn direct_product(factors: &[GroupDesc]) -> GroupDesc {
    let mut degree = 0;
    let mut gens = Vec::new();
    for f in factors {
        let GroupDesc::Perm {
            degree: d,
            generators,
        } = f
        else {
            panic!("direct_product expects permutation descriptions");
        };
        for g in generators {
            gens.push(
                g.iter()
                    .map(|c| c.iter().map(|&x| x + degree).collect())
                    .collect(),
            );
        }
        degree += d;
    }
    GroupDesc::perm(degree.max(1), gens)
}

/// 2×2 matrices over F_p acting on the right of nonzero row vectors.
fn matrix_group(p: usize, mats: &[[usize; 4]]) -> GroupDesc {
    let vectors: Vec<(usize, usize)> = (0..p)
        .flat_map(|x| (0..p).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    let index = |v: (usize, usize)| vectors.iter().position(|&w| w == v).unwrap();
    let gens: Vec<Perm> = mats
        .iter()
        .map(|m| {
            let images = vectors
                .iter()
                .map(|&(x, y)| {
                    let v = ((x * m[0] + y * m[2]) % p, (x * m[1] + y * m[3]) % p);
                    index(v) as u32
                })
                .collect();
            Perm::from_images(images).expect("invertible matrix permutes vectors")
        })
        .collect();
    GroupDesc::from_perms(vectors.len(), &gens)
}

/// SL(2, p) on the `p² - 1` nonzero vectors.
pub fn special_linear_2(p: usize) -> GroupDesc {
    matrix_group(p, &[[1, 1, 0, 1], [1, 0, 1, 1]])
}

/// GL(2, p) on the `p² - 1` nonzero vectors.
pub fn general_linear_2(p: usize) -> GroupDesc {
    let primitive = (2..p)
        .find(|&a| (1..p - 1).all(|k| (0..k).fold(1, |acc, _| acc * a % p) != 1))
        .unwrap_or(1);
    matrix_group(p, &[[1, 1, 0, 1], [1, 0, 1, 1], [primitive, 0, 0, 1]])
}

/// Extraspecial group of order p³ and exponent p, as `C_p² ⋊ C_p` with
/// `(x, y) ↦ (x, x + y)`.
pub fn heisenberg(p: usize) -> GroupDesc {
    let normal = elementary_abelian(p, 2);
    let quotient = cyclic(p);
    // Generators of the normal part: x = (0..p), y = (p..2p).
    let x = cycle(0..p);
    let y = cycle(p..2 * p);
    let xy: Perm = Perm::from_cycles(2 * p, &[x.clone()])
        .unwrap()
        .compose(&Perm::from_cycles(2 * p, &[y.clone()]).unwrap())
        .unwrap();
    GroupDesc::Semidirect {
        normal: Box::new(normal),
        quotient: Box::new(quotient),
        action: vec![vec![xy.cycles(), vec![y]]],
    }
}

/// `C_q ⋊ C_r` with the generator of `C_r` acting as `x ↦ x^k`.
pub fn cyclic_extension(q: usize, r: usize, k: usize) -> GroupDesc {
    let x = Perm::from_cycles(q, &[cycle(0..q)]).unwrap();
    GroupDesc::Semidirect {
        normal: Box::new(cyclic(q)),
        quotient: Box::new(cyclic(r)),
        action: vec![vec![x.pow(k as u64).cycles()]],
    }
}

/// `(U × V) ⋊ ⟨α⟩` of order 1875: `U = ⟨x, y⟩` and `V = ⟨a, b⟩` elementary
/// abelian of order 25, with `α: x ↦ y, y ↦ x⁻¹y⁻¹` and the same rule on `V`.
pub fn example_1875() -> GroupDesc {
    let deg = 20;
    let gen = |start: usize| cycle(start..start + 5);
    let p = |c: &[Vec<usize>]| Perm::from_cycles(deg, c).unwrap();
    let x = p(&[gen(0)]);
    let y = p(&[gen(5)]);
    let a = p(&[gen(10)]);
    let b = p(&[gen(15)]);
    let inv_prod = |u: &Perm, v: &Perm| u.inverse().compose(&v.inverse()).unwrap();
    GroupDesc::Semidirect {
        normal: Box::new(GroupDesc::from_perms(deg, &[x.clone(), y.clone(), a.clone(), b.clone()])),
        quotient: Box::new(cyclic(3)),
        action: vec![vec![
            y.cycles(),
            inv_prod(&x, &y).cycles(),
            b.cycles(),
            inv_prod(&a, &b).cycles(),
        ]],
    }
}
