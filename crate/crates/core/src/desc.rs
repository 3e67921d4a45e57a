//! JSON group descriptions.
//!
//! ```json
//! {"type":"perm","degree":4,"generators":[[[0,1]],[[0,1,2,3]]]}
//! {"type":"catalog","name":"S4"}
//! {"type":"semidirect","normal":{..},"quotient":{..},"action":[[[[1,2]]]]}
//! ```
//!
//! In a semidirect description `action[i][j]` is the image, as a cycle list
//! in the normal group's points, of the normal group's `j`-th generator
//! under the quotient's `i`-th generator.

use serde::{Deserialize, Serialize};

use crate::construct::semidirect_product;
use crate::error::{GpiError, Result};
use crate::group::{Elem, Group, Limits};
use crate::perm::Perm;

pub type Cycles = Vec<Vec<usize>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupDesc {
    Perm {
        degree: usize,
        generators: Vec<Cycles>,
    },
    Catalog {
        name: String,
    },
    Semidirect {
        normal: Box<GroupDesc>,
        quotient: Box<GroupDesc>,
        action: Vec<Vec<Cycles>>,
    },
}

impl GroupDesc {
    pub fn perm(degree: usize, generators: Vec<Cycles>) -> Self {
        GroupDesc::Perm { degree, generators }
    }

    pub fn from_perms(degree: usize, gens: &[Perm]) -> Self {
        GroupDesc::Perm {
            degree,
            generators: gens.iter().map(Perm::cycles).collect(),
        }
    }

    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| GpiError::Description(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptions serialize")
    }

    pub fn build(&self, limits: &Limits) -> Result<Group> {
        match self {
            GroupDesc::Perm { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|c| Perm::from_cycles(*degree, c))
                    .collect::<Result<Vec<_>>>()?;
                Group::from_perms(*degree, gens, limits)
            }
            GroupDesc::Catalog { name } => {
                let entry = crate::harness::catalog::lookup(name)?;
                entry.desc.build(limits)
            }
            GroupDesc::Semidirect {
                normal,
                quotient,
                action,
            } => {
                let n = normal.build(limits)?;
                let q = quotient.build(limits)?;
                let images = action
                    .iter()
                    .map(|imgs| {
                        imgs.iter()
                            .map(|c| cycles_to_elem(&n, c))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                semidirect_product(&n, &q, &images, limits)
            }
        }
    }
}

/// Resolves a cycle list to an element of `g` (regular action for table groups).
pub fn cycles_to_elem(g: &Group, cycles: &Cycles) -> Result<Elem> {
    let p = Perm::from_cycles(g.degree(), cycles)?;
    g.id_of(&p)
        .ok_or_else(|| GpiError::Description(format!("{p} is not an element of the group")))
}
