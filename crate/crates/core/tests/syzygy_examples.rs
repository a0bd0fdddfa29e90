use linarr_core::corpus;
use linarr_core::invariants::verify_all;
use linarr_core::poly::{HomPoly, Var};
use linarr_core::syzygy::{class_nonzero_mod, dim_s, extremal_pair, Jacobian};
use linarr_core::{ProjPoint, SyzygyError};

#[test]
fn c1_relations() {
    let jac = Jacobian::new(&corpus::c1());
    assert_eq!(jac.mdr(), 3);
    assert_eq!(jac.ar_dim(2), 0);
    assert_eq!(jac.ar_dim(5), 10);
    let rho1 = jac.min_syzygy();
    assert_eq!(rho1.degree(), 3);
    assert!(jac.verify(&rho1));

    let p = ProjPoint::from_ints(0, 0, 1).unwrap();
    let q = ProjPoint::from_ints(2, -1, 0).unwrap();
    let (rp, rq) = jac.rho_pair(&p, &q).unwrap();
    assert_eq!((rp.degree(), rq.degree()), (3, 4));
    assert!(jac.verify(&rp) && jac.verify(&rq));
    assert!(class_nonzero_mod(&rq, &rp).unwrap());
    assert_eq!(extremal_pair(&jac.arrangement().lattice()), Some((p.clone(), q)));

    assert_eq!(jac.rho_pair(&p, &p), Err(SyzygyError::NotALatticePoint));
    let off = ProjPoint::from_ints(1, 1, 1).unwrap();
    assert_eq!(jac.rho_point(&off), Err(SyzygyError::NotALatticePoint));
    assert!(matches!(class_nonzero_mod(&rp, &rq), Err(SyzygyError::DegreeOrder { .. })));
}

#[test]
fn point_relations_hold_across_the_corpus() {
    for (name, a) in corpus::named() {
        let jac = Jacobian::new(&a);
        for lp in a.lattice().points() {
            let rho = jac.rho_point(&lp.point).unwrap();
            assert!(jac.verify(&rho), "{name} at {:?}", lp.point);
            assert_eq!(rho.degree(), a.degree() - lp.multiplicity(), "{name}");
        }
    }
}

#[test]
fn bourbaki_images_on_c1() {
    let jac = Jacobian::new(&corpus::c1());
    let rho1 = jac.min_syzygy();
    let fresh = jac
        .ar_basis(5)
        .into_iter()
        .find(|rho| class_nonzero_mod(rho, &rho1).unwrap())
        .expect("AR(f)_5 is larger than S_2 rho1");
    let v = jac.bourbaki_image(&rho1, &fresh).unwrap();
    assert_eq!(v.degree(), 2);
    assert!(!v.is_zero());

    assert!(jac.bourbaki_image(&rho1, &rho1).unwrap().is_zero());
    let h = HomPoly::var(Var::X).mul(&HomPoly::var(Var::Y)).add(&HomPoly::var(Var::Z).pow(2)).unwrap();
    assert!(jac.bourbaki_image(&rho1, &rho1.times(&h)).unwrap().is_zero());
}

#[test]
fn exact_sequence_in_every_degree() {
    for (name, a) in corpus::named() {
        let rep = verify_all(&a);
        if rep.is_free() {
            continue;
        }
        let jac = Jacobian::new(&a);
        let rho1 = rep.min_syzygy.clone();
        let (d, r) = (a.degree(), rep.r as usize);
        for q in r..=d - 2 {
            let bourbaki = match (q + r + 1).checked_sub(d) {
                Some(k) => jac.bourbaki_dim(&rho1, k).unwrap(),
                None => 0,
            };
            assert_eq!(
                jac.ar_dim(q),
                dim_s(q as i64 - r as i64) + bourbaki,
                "{name} at q = {q}"
            );
        }
    }
}

#[test]
fn exact_sequence_two_pencils() {
    let a = corpus::two_pencils(2, 3);
    let jac = Jacobian::new(&a);
    let rho1 = jac.min_syzygy();
    assert_eq!(rho1.degree(), 2);
    // q = 3: k = q + r + 1 - d = 1
    assert_eq!(jac.ar_dim(3), dim_s(1) + jac.bourbaki_dim(&rho1, 1).unwrap());
}

#[test]
fn free_curves_have_no_bourbaki_ideal() {
    let jac = Jacobian::new(&corpus::triangle());
    let rho1 = jac.min_syzygy();
    assert_eq!(jac.bourbaki_dim(&rho1, 0), Err(SyzygyError::FreeCurve));
}

#[test]
fn small_mdr_characterizations() {
    for (name, a) in corpus::named() {
        let r = Jacobian::new(&a).mdr();
        let (m, _) = a.lattice().m_and_n();
        let d = a.degree();
        assert_eq!(r == 0, m == d, "{name}");
        assert_eq!(r == 1, m + 1 == d, "{name}");
    }
}
