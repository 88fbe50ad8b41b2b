use hyperlie::catalog::{gl_to_gl_plus2, gl_to_sl, hypercomplex_sl_c, Inclusion};
use hyperlie::hkt::{
    hermitian_family, hkt_constrain, pd_feasibility, restrict, subalgebra_restriction_check, Feasibility,
};
use hyperlie::liealg::Matrix;
use hyperlie::structures::induced_hypercomplex;

fn check_inclusion(inc: &Inclusion) {
    let hs = induced_hypercomplex(inc.source.lie(), &inc.source.cp).unwrap();
    let ht = induced_hypercomplex(inc.target.lie(), &inc.target.cp).unwrap();
    let p = inc.complexified(&hs, &ht);
    let sub = restrict(&ht.algebra, &ht.structure, &p).unwrap();
    assert_eq!(sub.algebra.entries(), hs.algebra.entries(), "{}", inc.name);
    assert_eq!(sub.structure, hs.structure, "{}", inc.name);
    let r = subalgebra_restriction_check(&ht.algebra, &ht.structure, &p).unwrap();
    assert!(r.compatible, "{}", inc.name);
    assert!(r.own_certificate.is_some(), "{}", inc.name);
}

#[test]
fn gl2c_in_sl3c() {
    check_inclusion(&gl_to_sl(1).unwrap());
}

#[test]
fn gl2c_in_gl4c() {
    check_inclusion(&gl_to_gl_plus2(1).unwrap());
}

#[test]
fn full_subalgebra_is_trivially_compatible() {
    let (_, ih) = hypercomplex_sl_c(1).unwrap();
    let r = subalgebra_restriction_check(&ih.algebra, &ih.structure, &Matrix::identity(16)).unwrap();
    assert!(r.compatible);
    assert_eq!(r.pulled_back_dim, r.own_family_dim);
}

#[test]
fn sl3c_direct() {
    let (_, ih) = hypercomplex_sl_c(1).unwrap();
    let fam = hermitian_family(&ih.structure);
    assert_eq!(fam.dim(), 28);
    let hkt = hkt_constrain(&ih.algebra, &ih.structure, &fam);
    assert!(matches!(pd_feasibility(&hkt), Feasibility::Infeasible(_)));
}
