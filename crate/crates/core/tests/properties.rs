use cliffordt::matrix::{bloch, Gate, Mat2, Mat3, ParityMat3, ResidueMat2};
use cliffordt::normal::{eval_word, MAForm};
use cliffordt::rings::{DOmega, DRoot2, Residue, ZOmega, ZRoot2};
use proptest::prelude::*;

fn zomega() -> impl Strategy<Value = ZOmega> {
    (-50i64..50, -50i64..50, -50i64..50, -50i64..50).prop_map(|(a, b, c, d)| ZOmega::new(a, b, c, d))
}

fn zroot2() -> impl Strategy<Value = ZRoot2> {
    (-50i64..50, -50i64..50).prop_map(|(a, b)| ZRoot2::new(a, b))
}

fn domega() -> impl Strategy<Value = DOmega> {
    (zomega(), 0u32..6).prop_map(|(n, k)| DOmega::new(n, k))
}

fn droot2() -> impl Strategy<Value = DRoot2> {
    (zroot2(), 0u32..6).prop_map(|(n, k)| DRoot2::new(n, k))
}

fn gate() -> impl Strategy<Value = Gate> {
    prop::sample::select(Gate::ALL.to_vec())
}

fn word(max: usize) -> impl Strategy<Value = Vec<Gate>> {
    prop::collection::vec(gate(), 0..max)
}

fn residue_mat() -> impl Strategy<Value = ResidueMat2> {
    prop::array::uniform4(0u8..16).prop_map(|[a, b, c, d]| ResidueMat2::from_bits([[a, b], [c, d]]))
}

fn parity_mat() -> impl Strategy<Value = ParityMat3> {
    prop::array::uniform9(0u8..2).prop_map(|b| ParityMat3::new([[b[0], b[1], b[2]], [b[3], b[4], b[5]], [b[6], b[7], b[8]]]))
}

proptest! {
    #[test]
    fn residue_is_a_ring_homomorphism(s in zomega(), t in zomega()) {
        prop_assert_eq!((s.clone() + t.clone()).residue(), s.residue() + t.residue());
        prop_assert_eq!((s.clone() * t.clone()).residue(), s.residue() * t.residue());
    }

    #[test]
    fn parity_is_a_ring_homomorphism(x in zroot2(), y in zroot2()) {
        prop_assert_eq!((x.clone() + y.clone()).parity(), x.parity() + y.parity());
        prop_assert_eq!((x.clone() * y.clone()).parity(), x.parity() * y.parity());
    }

    #[test]
    fn conjugation_is_an_involutive_homomorphism(s in zomega(), t in zomega()) {
        prop_assert_eq!(s.conj().conj(), s.clone());
        prop_assert_eq!((s.clone() * t.clone()).conj(), s.conj() * t.conj());
        prop_assert_eq!((s.clone() + t.clone()).conj(), s.conj() + t.conj());
    }

    #[test]
    fn sqrt2_multiplication_round_trips(t in zomega()) {
        prop_assert_eq!(t.mul_sqrt2().div_sqrt2().unwrap(), t.clone());
        prop_assert_eq!(t.symm_div().mul_sqrt2(), t.clone() + t.conj());
        prop_assert_eq!(t.mul_sqrt2().residue(), cliffordt::residues::res_mul_sqrt2(t.residue()));
    }

    #[test]
    fn residue_operations_well_defined(s in zomega(), t in zomega()) {
        let shift = |x: &ZOmega| ZOmega::from_int(2) * x.clone();
        let t2 = s.clone() + shift(&t);
        prop_assert_eq!(s.mul_sqrt2().residue(), t2.mul_sqrt2().residue());
        prop_assert_eq!((s.conj() * s.clone()).residue(), (t2.conj() * t2.clone()).residue());
        prop_assert_eq!(s.symm_div().residue(), t2.symm_div().residue());
    }

    #[test]
    fn domega_ring_laws(x in domega(), y in domega(), z in domega()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!(x.to_string().parse::<DOmega>().unwrap(), x);
    }

    #[test]
    fn droot2_ring_laws(x in droot2(), y in droot2()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) - &x, y.clone());
        prop_assert_eq!(x.to_string().parse::<DRoot2>().unwrap(), x);
    }

    #[test]
    fn sim_s_is_an_equivalence(a in residue_mat(), b in residue_mat(), c in residue_mat()) {
        prop_assert!(a.sim_s(&a));
        prop_assert_eq!(a.sim_s(&b), b.sim_s(&a));
        if a.sim_s(&b) && b.sim_s(&c) {
            prop_assert!(a.sim_s(&c));
        }
        for m in a.orbit() {
            prop_assert!(m.sim_s(&a));
        }
        prop_assert_eq!(a.to_string().parse::<ResidueMat2>().unwrap(), a);
    }

    #[test]
    fn sim_c_is_an_equivalence(a in parity_mat(), b in parity_mat(), c in parity_mat()) {
        prop_assert!(a.sim_c(&a));
        prop_assert_eq!(a.sim_c(&b), b.sim_c(&a));
        if a.sim_c(&b) && b.sim_c(&c) {
            prop_assert!(a.sim_c(&c));
        }
    }

    #[test]
    fn bloch_is_a_homomorphism(u in word(12), v in word(12)) {
        let (mu, mv) = (eval_word(&u), eval_word(&v));
        prop_assert_eq!(bloch(&(&mu * &mv)), &bloch(&mu) * &bloch(&mv));
        let b = bloch(&mu);
        prop_assert!(b.is_orthogonal());
        prop_assert!(b.check_special_orthogonal().is_ok());
    }

    #[test]
    fn normalize_sound_and_idempotent(w in word(60)) {
        let m = MAForm::normalize(&w);
        prop_assert_eq!(m.eval(), eval_word(&w));
        prop_assert_eq!(MAForm::normalize(&m.gates()), m.clone());
        prop_assert_eq!(m.to_string().parse::<MAForm>().unwrap(), m.clone());
        let xyz = m.to_xyz();
        prop_assert_eq!(xyz.to_string().parse::<cliffordt::normal::XYZForm>().unwrap(), xyz);
    }

    #[test]
    fn matrices_print_and_parse(w in word(30)) {
        let u = eval_word(&w);
        prop_assert_eq!(u.to_string().parse::<Mat2>().unwrap(), u.clone());
        let b = bloch(&u);
        prop_assert_eq!(b.to_string().parse::<Mat3>().unwrap(), b);
    }

    #[test]
    fn synthesis_inverts_evaluation(w in word(40)) {
        let u = eval_word(&w);
        prop_assert_eq!(cliffordt::synthesis::synth_u2(&u).unwrap(), MAForm::normalize(&w));
    }

    #[test]
    fn normal_form_is_concatenation_stable(u in word(25), v in word(25)) {
        let mut uv = u.clone();
        uv.extend(&v);
        let left = MAForm::normalize(&u);
        let mut joined = left.gates();
        joined.extend(&v);
        prop_assert_eq!(MAForm::normalize(&joined), MAForm::normalize(&uv));
    }
}

#[test]
fn reducible_residues_are_sqrt2_multiples() {
    for r in Residue::all() {
        let is_image = Residue::all().any(|s| cliffordt::residues::res_mul_sqrt2(s) == r);
        assert_eq!(r.is_reducible(), is_image, "{r}");
    }
}
