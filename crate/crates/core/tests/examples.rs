//! Every example runs to completion.

#[allow(dead_code)]
mod path_quiver {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/path_quiver.rs"));
}

#[allow(dead_code)]
mod exact_linear_algebra {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exact_linear_algebra.rs"
    ));
}

#[allow(dead_code)]
mod canonical_bimodule {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/canonical_bimodule.rs"
    ));
}

#[allow(dead_code)]
mod ext_groups {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ext_groups.rs"));
}

#[allow(dead_code)]
mod fixed_points {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fixed_points.rs"));
}

#[allow(dead_code)]
mod cell_decomposition {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/cell_decomposition.rs"
    ));
}

#[allow(dead_code)]
mod point_counting {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/point_counting.rs"));
}

#[allow(dead_code)]
mod motive_recursion {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/motive_recursion.rs"
    ));
}

#[allow(dead_code)]
mod d4_cross_model {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/d4_cross_model.rs"));
}

#[allow(dead_code)]
mod command_line {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

#[test]
fn path_quiver_runs() {
    path_quiver::run().expect("path_quiver example");
}

#[test]
fn exact_linear_algebra_runs() {
    exact_linear_algebra::run().expect("exact_linear_algebra example");
}

#[test]
fn canonical_bimodule_runs() {
    canonical_bimodule::run().expect("canonical_bimodule example");
}

#[test]
fn ext_groups_runs() {
    ext_groups::run().expect("ext_groups example");
}

#[test]
fn fixed_points_runs() {
    fixed_points::run().expect("fixed_points example");
}

#[test]
fn cell_decomposition_runs() {
    cell_decomposition::run().expect("cell_decomposition example");
}

#[test]
fn point_counting_runs() {
    point_counting::run().expect("point_counting example");
}

#[test]
fn motive_recursion_runs() {
    motive_recursion::run().expect("motive_recursion example");
}

#[test]
fn d4_cross_model_runs() {
    d4_cross_model::run().expect("d4_cross_model example");
}

#[test]
fn command_line_runs() {
    command_line::run().expect("command_line example");
}
