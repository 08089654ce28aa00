//! Exact structure, character theory and higher Frobenius–Schur indicators for the groups
//! G = Z_{2^l} ⋊ D_k (l ≥ 3, 4 | k) and their Drinfeld doubles D(G).

pub mod characters;
pub mod double;
pub mod error;
pub mod group;
pub mod group_indicators;
pub mod structure;

pub use characters::{CharLabel, CharacterTable, ClassFunction};
pub use double::{DoubleGroup, DoubleModuleLabel, DoubleRow, GmCase, GmCaseTally, GmRecord};
pub use error::{Error, Result};
pub use group::{make_group, Group, GroupElement, GroupParams};
pub use group_indicators::{IndicatorPath, IndicatorValue};
pub use structure::{ClassType, ConjugacyClass, Structure, Subgroup};
