macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(abelian_groups, "abelian_groups.rs");
example!(branch_data, "branch_data.rs");
example!(cohomology_kernel, "cohomology_kernel.rs");
example!(extended_automorphism, "extended_automorphism.rs");
example!(fiber_defects, "fiber_defects.rs");
example!(census, "census.rs");
example!(verify_documents, "verify_documents.rs");

#[test]
fn abelian_groups_runs() {
    abelian_groups::run_example().unwrap();
}

#[test]
fn branch_data_runs() {
    branch_data::run_example().unwrap();
}

#[test]
fn cohomology_kernel_runs() {
    cohomology_kernel::run_example().unwrap();
}

#[test]
fn extended_automorphism_runs() {
    extended_automorphism::run_example().unwrap();
}

#[test]
fn fiber_defects_runs() {
    fiber_defects::run_example().unwrap();
}

#[test]
fn census_runs() {
    census::run_example().unwrap();
}

#[test]
fn verify_documents_runs() {
    verify_documents::run_example().unwrap();
}
