mod common;
use common::*;
use herglotz::gauss::GaussRat;
use herglotz::matrix::{sample_criterion_i, verify_criterion_ii, verify_criterion_iii};
use herglotz::rat::rat;
use herglotz::verdict::Outcome;
use rand::Rng;
use std::time::{Duration, Instant};

#[test]
fn profile_phases() {
    let mut r = rng(101);
    let g: Vec<GaussRat> = (1..=9).map(|k| GaussRat::new(rat(0, 1), rat(k as i64, 10))).collect();
    let (mut t_gen, mut t_ii, mut t_iii, mut t_i, mut t_bad) =
        (Duration::ZERO, Duration::ZERO, Duration::ZERO, Duration::ZERO, Duration::ZERO);
    for _case in 0..30 {
        let t = Instant::now();
        let n = r.gen_range(2..=4usize);
        let rep = rand_herglotz_rep(&mut r, n, 5);
        let q = rep.reconstruct().unwrap();
        t_gen += t.elapsed();
        let t = Instant::now();
        assert_eq!(verify_criterion_ii(&q).unwrap().outcome, Outcome::Accept);
        t_ii += t.elapsed();
        let t = Instant::now();
        assert_eq!(verify_criterion_iii(&q).unwrap().outcome, Outcome::Accept);
        t_iii += t.elapsed();
        let t = Instant::now();
        assert_eq!(sample_criterion_i(&q, &g).unwrap().outcome, Outcome::Accept);
        t_i += t.elapsed();
        let t = Instant::now();
        let bad = break_one_weight(&mut r, &rep);
        let qb = bad.reconstruct().unwrap();
        assert_eq!(verify_criterion_ii(&qb).unwrap().outcome, Outcome::Reject);
        assert_eq!(verify_criterion_iii(&qb).unwrap().outcome, Outcome::Reject);
        t_bad += t.elapsed();
    }
    println!("gen {t_gen:?} ii {t_ii:?} iii {t_iii:?} i {t_i:?} bad {t_bad:?}");
}

#[test]
fn profile_minor_phases() {
    use herglotz::cmat::IndexSet;
    use herglotz::divisor::divisor_of;
    let mut r = rng(101);
    let mut t_minor = Duration::ZERO;
    let mut t_div = Duration::ZERO;
    for _case in 0..10 {
        let n = r.gen_range(2..=4usize);
        let rep = rand_herglotz_rep(&mut r, n, 5);
        let q = rep.reconstruct().unwrap();
        for m in 1..=n {
            for ix in IndexSet::all_of_size(n, m) {
                let t = Instant::now();
                let f = q.minor(&ix).unwrap();
                t_minor += t.elapsed();
                if f.is_zero() || f.is_constant() {
                    continue;
                }
                let t = Instant::now();
                let _ = divisor_of(&f).unwrap();
                t_div += t.elapsed();
            }
        }
        let _ = break_one_weight(&mut r, &rep);
    }
    println!("minors {t_minor:?} divisors {t_div:?}");
}
