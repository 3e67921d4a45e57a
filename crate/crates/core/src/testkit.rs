//! Group shortcuts for unit tests.

use crate::desc::GroupDesc;
use crate::families;
use crate::group::{Group, Limits};
use crate::perm::Perm;

pub fn build(d: GroupDesc) -> Group {
    d.build(&Limits::default()).unwrap()
}

pub fn perm(n: usize, c: &[&[usize]]) -> Perm {
    let cycles: Vec<Vec<usize>> = c.iter().map(|x| x.to_vec()).collect();
    Perm::from_cycles(n, &cycles).unwrap()
}

pub fn symmetric(n: usize) -> Group {
    build(families::symmetric(n))
}

pub fn alternating(n: usize) -> Group {
    build(families::alternating(n))
}

pub fn cyclic(n: usize) -> Group {
    build(families::cyclic(n))
}

pub fn abelian(orders: &[usize]) -> Group {
    build(families::abelian(orders))
}

pub fn elementary_abelian(p: usize, k: usize) -> Group {
    build(families::elementary_abelian(p, k))
}

pub fn dihedral(order: usize) -> Group {
    build(families::dihedral(order))
}

pub fn quaternion(order: usize) -> Group {
    build(families::quaternion(order))
}

pub fn semidihedral(order: usize) -> Group {
    build(families::semidihedral(order))
}

pub fn sl2(p: usize) -> Group {
    build(families::special_linear_2(p))
}
