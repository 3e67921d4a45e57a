//! Named groups the corpus sweeps run over.

use crate::desc::GroupDesc;
use crate::error::{GpiError, Result};
use crate::families::*;
use crate::group::{Group, Limits};
use crate::recognize::recognize_small;
use crate::series::{is_soluble, is_supersoluble};

/// A fact about a catalog group checked after construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Known {
    Soluble(bool),
    Supersoluble(bool),
    Abelian(bool),
    IsQ8(bool),
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub desc: GroupDesc,
    pub order: usize,
    pub known: Vec<Known>,
}

impl CatalogEntry {
    fn new(name: &'static str, desc: GroupDesc, order: usize, known: &[Known]) -> Self {
        CatalogEntry {
            name,
            desc,
            order,
            known: known.to_vec(),
        }
    }

    /// Builds the group and insists on the recorded order.
    pub fn build(&self, limits: &Limits) -> Result<Group> {
        let g = self.desc.build(limits)?;
        if g.order() != self.order {
            return Err(GpiError::Description(format!(
                "catalog entry {} built a group of order {}, expected {}",
                self.name,
                g.order(),
                self.order
            )));
        }
        Ok(g)
    }

    /// Names of recorded facts that do not hold for `g`.
    pub fn check_known(&self, g: &Group) -> Result<Vec<String>> {
        let mut wrong = Vec::new();
        for &k in &self.known {
            let holds = match k {
                Known::Soluble(v) => is_soluble(g) == v,
                Known::Supersoluble(v) => is_supersoluble(g) == v,
                Known::Abelian(v) => g.is_abelian() == v,
                Known::IsQ8(v) => recognize_small(g)?.is_q8() == v,
            };
            if !holds {
                wrong.push(format!("{k:?}"));
            }
        }
        Ok(wrong)
    }
}

pub fn build_catalog() -> Vec<CatalogEntry> {
    use Known::*;
    let nilpotent = [Soluble(true), Supersoluble(true)];
    let abelian_ = [Soluble(true), Supersoluble(true), Abelian(true)];
    let e = CatalogEntry::new;
    vec![
        e("S3", symmetric(3), 6, &[Supersoluble(true), Abelian(false)]),
        e("S4", symmetric(4), 24, &[Soluble(true), Supersoluble(false)]),
        e("S5", symmetric(5), 120, &[Soluble(false)]),
        e("S6", symmetric(6), 720, &[Soluble(false)]),
        e("A4", alternating(4), 12, &[Soluble(true), Supersoluble(false)]),
        e("A5", alternating(5), 60, &[Soluble(false)]),
        e("D8", dihedral(8), 8, &[Supersoluble(true), IsQ8(false)]),
        e("D16", dihedral(16), 16, &nilpotent),
        e("D32", dihedral(32), 32, &nilpotent),
        e("Q8", quaternion(8), 8, &[Supersoluble(true), IsQ8(true)]),
        e("Q16", quaternion(16), 16, &nilpotent),
        e("Q32", quaternion(32), 32, &nilpotent),
        e("SD16", semidihedral(16), 16, &nilpotent),
        e("SD32", semidihedral(32), 32, &nilpotent),
        e("M16", modular(16), 16, &nilpotent),
        e("C2xD8", direct_product(&[cyclic(2), dihedral(8)]), 16, &nilpotent),
        e("C2xQ8", direct_product(&[cyclic(2), quaternion(8)]), 16, &nilpotent),
        e("C4xC2", abelian(&[4, 2]), 8, &abelian_),
        e("C4xC4", abelian(&[4, 4]), 16, &abelian_),
        e("C8", cyclic(8), 8, &abelian_),
        e("C9", cyclic(9), 9, &abelian_),
        e("C25", cyclic(25), 25, &abelian_),
        e("C27", cyclic(27), 27, &abelian_),
        e("C2^3", elementary_abelian(2, 3), 8, &abelian_),
        e("C2^4", elementary_abelian(2, 4), 16, &abelian_),
        e("C3^2", elementary_abelian(3, 2), 9, &abelian_),
        e("C3^3", elementary_abelian(3, 3), 27, &abelian_),
        e("C5^2", elementary_abelian(5, 2), 25, &abelian_),
        e("Heis27", heisenberg(3), 27, &[Supersoluble(true), Abelian(false)]),
        e("SL(2,3)", special_linear_2(3), 24, &[Soluble(true), Supersoluble(false)]),
        e("SL(2,5)", special_linear_2(5), 120, &[Soluble(false)]),
        e("GL(2,3)", general_linear_2(3), 48, &[Soluble(true), Supersoluble(false)]),
        e("C7:C3", cyclic_extension(7, 3, 2), 21, &[Supersoluble(true), Abelian(false)]),
        e("S3xS3", direct_product(&[symmetric(3), symmetric(3)]), 36, &[Supersoluble(true)]),
        e("Example1875", example_1875(), 1875, &[Soluble(true), Supersoluble(false)]),
    ]
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    build_catalog()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| GpiError::UnknownCatalog(name.to_string()))
}
