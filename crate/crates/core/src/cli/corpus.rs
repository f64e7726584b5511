//! Bundled group files, in run order.

use crate::cli::format::GroupFile;

const FILES: &[&str] = &[
    include_str!("../../corpus/torus_2d.json"),
    include_str!("../../corpus/klein_bottle.json"),
    include_str!("../../corpus/g1_torus_3d.json"),
    include_str!("../../corpus/g2_dicosm.json"),
    include_str!("../../corpus/g3_tricosm.json"),
    include_str!("../../corpus/g4_tetracosm.json"),
    include_str!("../../corpus/g5_hexacosm.json"),
    include_str!("../../corpus/g6_didicosm.json"),
    include_str!("../../corpus/b1_first_amphicosm.json"),
    include_str!("../../corpus/b2_second_amphicosm.json"),
    include_str!("../../corpus/b3_first_amphidicosm.json"),
    include_str!("../../corpus/b4_second_amphidicosm.json"),
    include_str!("../../corpus/c5_companion_5d.json"),
    include_str!("../../corpus/c4_conjugated_4d.json"),
    include_str!("../../corpus/s3_permutation_4d.json"),
    include_str!("../../corpus/c35_bieberbach_11d.json"),
    include_str!("../../corpus/p2_rotation_2d.json"),
    include_str!("../../corpus/pm_reflection_2d.json"),
    include_str!("../../corpus/p3_rotation_2d.json"),
    include_str!("../../corpus/p4_rotation_2d.json"),
    include_str!("../../corpus/p6_rotation_2d.json"),
    include_str!("../../corpus/c3_split_3d.json"),
    include_str!("../../corpus/didicosm_split_3d.json"),
];

/// Every bundled group file, parsed.
pub fn corpus() -> Vec<GroupFile> {
    FILES.iter().map(|t| GroupFile::parse(t).expect("bundled corpus parses")).collect()
}

pub fn find(name: &str) -> Option<GroupFile> {
    corpus().into_iter().find(|f| f.name == name)
}
