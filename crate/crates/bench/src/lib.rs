//! Shared fixtures for the benches in `benches/`.

use fsind_core::{DoubleGroup, Group, GroupElement, Structure};

/// Parameter sets the benches sweep, smallest first.
pub const SIZES: [(u32, u32); 3] = [(3, 4), (3, 8), (4, 8)];

pub fn group(l: u32, k: u32) -> Group {
    Group::build(l, k).expect("valid bench parameters")
}

pub fn double(l: u32, k: u32) -> DoubleGroup {
    DoubleGroup::build(group(l, k)).expect("double builds")
}

/// One representative per noncentral class.
pub fn noncentral_reps(group: &Group) -> Vec<GroupElement> {
    let s = Structure::build(group).expect("structure builds");
    s.classes
        .iter()
        .filter(|c| c.type_tag != fsind_core::ClassType::Central)
        .map(|c| c.representative)
        .collect()
}
