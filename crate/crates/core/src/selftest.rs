//! The acceptance suite, shared by the `acceptance` test target and the
//! `selftest` command. Each criterion runs at its stated size and
//! tolerance and reports a single pass/fail line.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::matrix::{bloch, enumerate_bloch_cliffords, enumerate_cliffords, mat2_mul_count, Gate, Mat2};
use crate::normal::{eval_word, t_count_word, MAForm, MaSyllable};
use crate::random::{random_form, random_form_upto, random_word, seeded};
use crate::residues::{analyze, check_unit_vector, res_mul_sqrt2, res_norm, res_symm, sample_single_digit_vector};
use crate::rings::{Residue, ZOmega};
use crate::synthesis::{dot_product_identities_hold, synth_u2_traced};

#[derive(Clone, Debug)]
pub struct Report {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {} {}: {} ({:.2?})",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed
        )
    }
}

type Outcome = std::result::Result<String, String>;
type Criterion = (u8, &'static str, fn() -> Outcome);

fn run(id: u8, name: &'static str, f: fn() -> Outcome) -> Report {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Report { id, name, passed, detail, elapsed: start.elapsed() }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)*));
        }
    };
}

pub const CRITERIA: [Criterion; 11] = [
    (1, "group cardinalities", group_cardinalities),
    (2, "residue operation table", residue_table),
    (3, "uniqueness census", uniqueness_census),
    (4, "normalization soundness", normalization_soundness),
    (5, "T-optimality by breadth-first search", t_optimality),
    (6, "T-count equals Bloch denominator exponent", t_count_is_k),
    (7, "synthesis round trip", synthesis_round_trip),
    (8, "residue automaton analytics", residue_analytics),
    (9, "lemma suite", lemma_suite),
    (10, "linear-time normalization", linearity),
    (11, "alternative normal forms", alternative_forms),
];

pub fn run_criterion(id: u8) -> Option<Report> {
    CRITERIA.iter().find(|c| c.0 == id).map(|&(id, name, f)| run(id, name, f))
}

pub fn run_all() -> Vec<Report> {
    CRITERIA.iter().map(|&(id, name, f)| run(id, name, f)).collect()
}

fn group_cardinalities() -> Outcome {
    let cliffords = enumerate_cliffords();
    let unitaries: HashSet<&Mat2> = cliffords.iter().map(|c| c.unitary()).collect();
    let in_s = cliffords.iter().filter(|c| c.in_s()).count();
    let blochs: HashSet<_> = enumerate_bloch_cliffords().into_iter().collect();
    let all_blochs: HashSet<_> = cliffords.iter().map(|c| bloch(c.unitary())).collect();
    ensure!(unitaries.len() == 192, "{} Clifford unitaries", unitaries.len());
    ensure!(in_s == 64, "{in_s} elements of S");
    ensure!(blochs.len() == 24 && all_blochs == blochs, "{} Bloch Cliffords", all_blochs.len());
    Ok("192 unitaries, 64 in S, 24 Bloch rotations".into())
}

const TABLE: [[u8; 4]; 16] = [
    [0b0000, 0b0000, 0b0000, 0b0000],
    [0b0001, 0b1010, 0b0001, 0b1010],
    [0b0010, 0b0101, 0b0001, 0b0001],
    [0b0011, 0b1111, 0b1010, 0b1011],
    [0b0100, 0b1010, 0b0001, 0b0000],
    [0b0101, 0b0000, 0b0000, 0b1010],
    [0b0110, 0b1111, 0b1010, 0b0001],
    [0b0111, 0b0101, 0b0001, 0b1011],
    [0b1000, 0b0101, 0b0001, 0b0001],
    [0b1001, 0b1111, 0b1010, 0b1011],
    [0b1010, 0b0000, 0b0000, 0b0000],
    [0b1011, 0b1010, 0b0001, 0b1010],
    [0b1100, 0b1111, 0b1010, 0b0001],
    [0b1101, 0b0101, 0b0001, 0b1011],
    [0b1110, 0b1010, 0b0001, 0b0000],
    [0b1111, 0b0000, 0b0000, 0b1010],
];

fn residue_table() -> Outcome {
    for [r, s, n, y] in TABLE {
        let r = Residue::from_bits(r);
        let got = [res_mul_sqrt2(r), res_norm(r), res_symm(r)].map(Residue::bits);
        ensure!(got == [s, n, y], "row {r}: got {got:?}");
    }
    Ok("48 entries match".into())
}

/// All forms with T-count exactly `t` and tail `I`, in enumeration order.
fn prefixes(t: usize) -> Vec<(bool, Vec<MaSyllable>)> {
    let syllable_words = |n: usize| {
        (0..1u64 << n).map(move |bits| {
            (0..n)
                .map(|i| if bits >> i & 1 == 0 { MaSyllable::HT } else { MaSyllable::SHT })
                .collect::<Vec<_>>()
        })
    };
    if t == 0 {
        return vec![(false, vec![])];
    }
    syllable_words(t - 1)
        .map(|s| (true, s))
        .chain(syllable_words(t).map(|s| (false, s)))
        .collect()
}

fn uniqueness_census() -> Outcome {
    let cliffords = enumerate_cliffords();
    let mut seen = HashSet::new();
    let mut total = 0;
    for t in 0..=6 {
        let expected = if t == 0 { 192 } else { 3 * (1 << (t - 1)) * 192 };
        let mut count = 0;
        for (lead, syllables) in prefixes(t) {
            let prefix = MAForm::new(lead, syllables.clone(), cliffords[0]).eval();
            for &c in &cliffords {
                let m = MAForm::new(lead, syllables.clone(), c);
                ensure!(m.t_count() == t, "T-count mismatch for {m}");
                let u = &prefix * c.unitary();
                ensure!(seen.insert(u), "collision at {m}");
                count += 1;
            }
        }
        ensure!(count == expected, "t={t}: {count} forms, expected {expected}");
        total += count;
    }
    ensure!(total == 36480, "{total} forms");
    Ok(format!("{total} forms, all unitaries distinct"))
}

fn normalization_soundness() -> Outcome {
    let mut rng = seeded(4);
    for i in 0..1000 {
        let len = rng.gen_range(0..=200);
        let w = random_word(&mut rng, len);
        let m = MAForm::normalize(&w);
        ensure!(m.eval() == eval_word(&w), "word {i} evaluates differently");
        ensure!(m.t_count() <= t_count_word(&w), "word {i} gained T gates");
    }
    Ok("1000 words".into())
}

fn t_optimality() -> Outcome {
    let cliffords = enumerate_cliffords();
    let t = Gate::T.unitary();
    let steps: Vec<(Mat2, Vec<Gate>)> = cliffords
        .iter()
        .map(|c| {
            let mut w = vec![Gate::T];
            w.extend(c.gates());
            (t * c.unitary(), w)
        })
        .collect();
    let mut seen: HashSet<Mat2> = HashSet::new();
    let mut level: HashMap<Mat2, Vec<Gate>> = HashMap::new();
    for c in &cliffords {
        level.insert(c.unitary().clone(), c.gates());
    }
    let mut sizes = Vec::new();
    for depth in 0..=4 {
        for (u, w) in &level {
            let m = MAForm::normalize(w);
            ensure!(m.t_count() == depth, "{} at BFS depth {depth} normalizes to T-count {}", word(w), m.t_count());
            ensure!(&m.eval() == u, "{} evaluates differently", word(w));
        }
        sizes.push(level.len());
        seen.extend(level.keys().cloned());
        if depth == 4 {
            break;
        }
        let mut next = HashMap::new();
        for (u, w) in &level {
            for (s, sw) in &steps {
                let v = u * s;
                if seen.contains(&v) || next.contains_key(&v) {
                    continue;
                }
                let mut nw = w.clone();
                nw.extend_from_slice(sw);
                next.insert(v, nw);
            }
        }
        level = next;
    }
    let expected = [192, 576, 1152, 2304, 4608];
    ensure!(sizes == expected, "level sizes {sizes:?}");
    Ok(format!("level sizes {sizes:?}, {} operators", seen.len()))
}

fn word(w: &[Gate]) -> String {
    crate::matrix::word_string(w)
}

fn forms_up_to_128() -> Vec<MAForm> {
    let mut rng = seeded(6);
    (0..1000).map(|_| random_form_upto(&mut rng, 128)).collect()
}

fn t_count_is_k() -> Outcome {
    for m in forms_up_to_128() {
        let k = bloch(&m.eval()).lde() as usize;
        ensure!(k == m.t_count(), "k={k} for T-count {}: {m}", m.t_count());
    }
    Ok("1000 forms, t <= 128".into())
}

fn synthesis_round_trip() -> Outcome {
    for m in forms_up_to_128() {
        let u = m.eval();
        let s = synth_u2_traced(&u).map_err(|e| format!("{m}: {e}"))?;
        ensure!(s.form == m, "synthesized {} from {m}", s.form);
        let k = bloch(&u).lde();
        ensure!(s.iterations == k, "{} iterations for k={k}", s.iterations);
    }
    Ok("1000 forms, iterations = k".into())
}

fn residue_analytics() -> Outcome {
    let mut rng = seeded(8);
    let mut nodes = HashSet::new();
    for _ in 0..1000 {
        let m = random_form_upto(&mut rng, 64);
        let c = analyze(&m.eval()).map_err(|e| format!("{m}: {e}"))?;
        ensure!(c.t == m.t_count() && c.h == m.h_count(), "{m}: predicted t={} h={}", c.t, c.h);
        let (t, h, k2) = (c.t as i64, c.h as i64, 2 * i64::from(c.k));
        ensure!(k2 - 3 <= t && t <= k2 + 1, "t bound fails for {m}");
        ensure!(k2 - 2 <= h && h <= k2, "h bound fails for {m}");
        nodes.insert(c.node.id);
    }
    Ok(format!("1000 forms, {} vertices visited", nodes.len()))
}

fn lemma_suite() -> Outcome {
    let mut rng = seeded(9);
    for _ in 0..10_000 {
        let mut c = || rng.gen_range(-1000i64..=1000);
        let t = ZOmega::new(c(), c(), c(), c());
        let s = t.clone() + t.conj();
        ensure!(s.divisible_by_sqrt2(), "{t} + conj not divisible");
        ensure!(t.symm_div().mul_sqrt2() == s, "symm_div mismatch at {t}");
    }
    for m in (0..100).map(|_| random_form_upto(&mut rng, 40)) {
        let v = bloch(&m.eval());
        let k = v.lde();
        for k in [k, k + 1] {
            let ok = dot_product_identities_hold(&v, k).map_err(|e| e.to_string())?;
            ensure!(ok, "dot-product identities fail for {m} at k={k}");
        }
    }
    for i in 0..1000 {
        let v = sample_single_digit_vector(&mut rng, 2 + i % 5);
        ensure!(!check_unit_vector(&v), "unit vector with single-digit residues");
    }
    Ok("10^4 divisibility, 100 Bloch matrices, 10^3 vectors".into())
}

fn time_normalize(w: &[Gate]) -> Duration {
    (0..5)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(MAForm::normalize(std::hint::black_box(w)));
            start.elapsed()
        })
        .min()
        .unwrap()
}

fn linearity() -> Outcome {
    let mut rng = seeded(10);
    let short = random_word(&mut rng, 100_000);
    let long = random_word(&mut rng, 200_000);
    MAForm::normalize(&short[..1000]);
    let before = mat2_mul_count();
    let (a, b) = (time_normalize(&short), time_normalize(&long));
    let products = mat2_mul_count() - before;
    ensure!(products == 0, "{products} matrix products during normalization");
    let ratio = b.as_secs_f64() / a.as_secs_f64().max(1e-9);
    ensure!(ratio <= 3.0, "time ratio {ratio:.2}");
    Ok(format!("{a:.2?} vs {b:.2?}, ratio {ratio:.2}, no matrix products"))
}

fn alternative_forms() -> Outcome {
    let mut rng = seeded(11);
    for _ in 0..1000 {
        let t = rng.gen_range(0..=40);
        let m = random_form(&mut rng, t);
        let u = m.eval();
        let (et, bs, xyz) = (m.to_et(), m.to_bs(), m.to_xyz());
        ensure!(et.eval() == u && bs.eval() == u && xyz.eval() == u, "{m}: eval changed");
        ensure!(
            et.t_count() == t && bs.t_count() == t && xyz.t_count() == t,
            "{m}: T-count changed"
        );
        ensure!(xyz.axes().windows(2).all(|p| p[0] != p[1]), "{m}: repeated axis in {xyz}");
        ensure!(MAForm::from_et(&et) == m, "{m}: ET round trip");
        ensure!(MAForm::from_bs(&bs) == m, "{m}: BS round trip");
        ensure!(MAForm::from_xyz(&xyz) == m, "{m}: XYZ round trip");
        ensure!(xyz.to_et() == et, "{m}: XYZ/ET mismatch");
    }
    Ok("1000 forms, ET/BS/XYZ".into())
}
