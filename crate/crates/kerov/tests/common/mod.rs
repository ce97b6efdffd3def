//! Property suites shared by the property tests and the acceptance run.
#![allow(dead_code)]

use std::sync::OnceLock;

use kerov_core::cumulants::{
    add_box_update, anisotropic_mr, free_cumulants, moments, moments_from_cumulants, moments_from_measure,
    transition_measure,
};
use kerov_core::diagrams::{anisotropic, anisotropic_symbolic, corners, GeneralizedDiagram};
use kerov_core::field::{int, rat, FieldElement, Rational};
use kerov_core::jack::JackBook;
use kerov_core::kerov::{ch_degree, KerovBasis, KerovPolynomial, KerovSolver};
use kerov_core::partitions::{dominance_leq, enumerate_partitions, partitions_up_to, z_mu, Partition};
use kerov_core::plancherel::{jack_hook, transition_kernel};
use kerov_core::symfunc::{convert, Basis, SymFun, TransitionTables};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const CASES: u32 = 1000;

/// Largest degree of the shared Jack and transition tables.
const TABLE_DEGREE: usize = 7;
const KEROV_DEGREE: usize = 6;

pub struct Suite {
    pub name: &'static str,
    pub run: fn(&mut TestRunner) -> Result<(), String>,
}

pub fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "p1 vanishes", run: p1_vanishes },
        Suite { name: "interlacing", run: interlacing },
        Suite { name: "dilation homogeneity", run: dilation_homogeneity },
        Suite { name: "basis conversion round trip", run: conversion_round_trip },
        Suite { name: "moments agree with atoms", run: moments_agree_with_atoms },
        Suite { name: "R2 equals size", run: r2_equals_size },
        Suite { name: "Jack orthogonality and norms", run: jack_orthogonality },
        Suite { name: "partition order laws", run: partition_laws },
        Suite { name: "field arithmetic", run: field_arithmetic },
        Suite { name: "growth kernel is a probability", run: kernel_is_probability },
        Suite { name: "box-adding update", run: box_update },
        Suite { name: "Kerov polynomial evaluates to Ch", run: kerov_evaluates_to_ch },
    ]
}

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn finish(r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::new)
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=15, 1i64..=15).prop_map(|(a, b)| rat(a, b))
}

/// A generalized diagram with rational corners: a stretched Young diagram.
fn rational_diagram() -> impl Strategy<Value = GeneralizedDiagram<Rational>> {
    (partition(8, 8), positive_rational(), positive_rational())
        .prop_map(|(l, s, t)| corners::<Rational>(&l).stretch(&s, &t).expect("positive stretch"))
}

fn tables() -> &'static Vec<TransitionTables> {
    static T: OnceLock<Vec<TransitionTables>> = OnceLock::new();
    T.get_or_init(|| (0..=TABLE_DEGREE).map(TransitionTables::new).collect())
}

fn book() -> &'static JackBook {
    static B: OnceLock<JackBook> = OnceLock::new();
    B.get_or_init(|| {
        let mut b = JackBook::default();
        b.ensure_up_to(TABLE_DEGREE).expect("within cap");
        b
    })
}

fn kerov_table() -> &'static Vec<KerovPolynomial> {
    static K: OnceLock<Vec<KerovPolynomial>> = OnceLock::new();
    K.get_or_init(|| {
        let mut s = KerovSolver::new(KEROV_DEGREE, book().clone());
        partitions_up_to(KEROV_DEGREE)
            .into_iter()
            .filter(|m| !m.is_empty() && ch_degree(m) <= KEROV_DEGREE)
            .map(|m| s.compute_k(&m).expect("within cap"))
            .collect()
    })
}

fn p1_vanishes(r: &mut TestRunner) -> Result<(), String> {
    finish(r.run(&(partition(8, 8), positive_rational(), positive_rational()), |(l, s, t)| {
        let d = corners::<Rational>(&l);
        ensure(d.power_sum(1) == int(0), || format!("p1 of {l}"))?;
        let st = d.stretch(&s, &t).unwrap();
        ensure(st.power_sum(1) == int(0), || format!("p1 of stretched {l}"))?;
        ensure(st.outer().len() == st.inner().len() + 1, || "corner counts".into())
    }))
}

fn interlacing(r: &mut TestRunner) -> Result<(), String> {
    finish(r.run(&(partition(8, 8), positive_rational(), positive_rational()), |(l, s, t)| {
        ensure(corners::<Rational>(&l).is_interlacing(), || format!("corners of {l}"))?;
        let st = corners::<Rational>(&l).stretch(&s, &t).unwrap();
        ensure(st.is_interlacing(), || format!("stretched corners of {l}"))
    }))
}

fn dilation_homogeneity(r: &mut TestRunner) -> Result<(), String> {
    finish(r.run(&(rational_diagram(), positive_rational()), |(d, s)| {
        let m = moments(&d, 6);
        let ms = moments(&d.dilate(&s).unwrap(), 6);
        let rc = free_cumulants(&m);
        let rs = free_cumulants(&ms);
        let mut sk = int(1);
        for k in 1..=6 {
            sk *= &s;
            ensure(*ms.get(k) == &sk * m.get(k), || format!("M{k}"))?;
            ensure(*rs.get(k) == &sk * rc.get(k), || format!("R{k}"))?;
        }
        Ok(())
    }))
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::M), Just(Basis::P), Just(Basis::H), Just(Basis::E)]
}

fn conversion_round_trip(r: &mut TestRunner) -> Result<(), String> {
    let strategy = (1usize..=6, basis(), basis(), prop::collection::vec((-9i64..=9, 0i64..=3), 11));
    finish(r.run(&strategy, |(n, from, to, raw)| {
        let parts = enumerate_partitions(n);
        let terms = parts
            .iter()
            .zip(raw)
            .map(|(p, (c, e))| (p.clone(), &FieldElement::from_int(c) * &FieldElement::t_pow(e)));
        let f = SymFun::from_terms(from, n, terms).unwrap();
        let t = &tables()[n];
        let there = convert(&f, to, t);
        let back = convert(&there, from, t);
        ensure(back == f, || format!("{from:?} -> {to:?} -> {from:?} on {f:?}"))
    }))
}

fn moments_agree_with_atoms(r: &mut TestRunner) -> Result<(), String> {
    finish(r.run(&rational_diagram(), |d| {
        let m = moments(&d, 6);
        let mu = transition_measure(&d);
        let total: Rational = mu.atoms.iter().map(|(_, w)| w.clone()).sum();
        ensure(total == int(1), || "atoms sum to one".into())?;
        ensure(moments_from_measure(&mu, 6) == m, || "moments from atoms".into())?;
        ensure(moments_from_cumulants(&free_cumulants(&m)) == m, || "cumulant round trip".into())
    }))
}

fn r2_equals_size(r: &mut TestRunner) -> Result<(), String> {
    finish(r.run(&(partition(6, 6), positive_rational()), |(l, s)| {
        let d = anisotropic(&l, &s).unwrap();
        let rc = free_cumulants(&moments(&d, 2));
        ensure(*rc.get(1) == int(0), || format!("R1 of {l}"))?;
        ensure(*rc.get(2) == int(l.size() as i64), || format!("R2 of {l}"))?;
        if l.size() <= 10 {
            let (_, rs) = anisotropic_mr(&l, 2);
            ensure(*rs.get(2) == FieldElement::from_int(l.size() as i64), || format!("symbolic R2 of {l}"))?;
        }
        Ok(())
    }))
}

fn jack_orthogonality(r: &mut TestRunner) -> Result<(), String> {
    let strategy = (1usize..=6, 0usize..64, 0usize..64, positive_rational());
    finish(r.run(&strategy, |(n, i, j, t)| {
        let parts = enumerate_partitions(n);
        let (a, b) = (&parts[i % parts.len()], &parts[j % parts.len()]);
        let table = book().get(n).unwrap();
        let alpha = &t * &t;
        let row = |l: &Partition| -> Vec<Rational> {
            parts.iter().map(|rho| table.theta(l, rho).unwrap().eval(&t).unwrap()).collect()
        };
        let (ra, rb) = (row(a), row(b));
        let mut inner = int(0);
        for (k, rho) in parts.iter().enumerate() {
            let w = Rational::from_integer(z_mu(rho).into()) * num_pow(&alpha, rho.len());
            inner += w * &ra[k] * &rb[k];
        }
        let want = if a == b { jack_hook(a).eval(&alpha) } else { int(0) };
        ensure(inner == want, || format!("<J{a}, J{b}> at t = {t}"))
    }))
}

fn num_pow(x: &Rational, e: usize) -> Rational {
    (0..e).fold(int(1), |acc, _| acc * x)
}

fn partition_laws(r: &mut TestRunner) -> Result<(), String> {
    finish(r.run(&(partition(7, 7), partition(7, 7)), |(a, b)| {
        ensure(a.conjugate().conjugate() == a, || format!("conjugation of {a}"))?;
        ensure(a.conjugate().size() == a.size(), || "size".into())?;
        if a.size() == b.size() {
            let fwd = dominance_leq(&a, &b).unwrap();
            let rev = dominance_leq(&b.conjugate(), &a.conjugate()).unwrap();
            ensure(fwd == rev, || format!("dominance of {a}, {b} under conjugation"))?;
        } else {
            ensure(dominance_leq(&a, &b).is_err(), || "sizes differ".into())?;
        }
        Ok(())
    }))
}

fn field_element() -> impl Strategy<Value = FieldElement> {
    (prop::collection::vec(-5i64..=5, 1..=4), prop::collection::vec(-3i64..=3, 0..=2), 0i64..=3).prop_map(
        |(num, den, shift)| {
            let p = |cs: &[i64]| cs.iter().rev().fold(FieldElement::from_int(0), |acc, &c| {
                &(&acc * &FieldElement::t()) + &FieldElement::from_int(c)
            });
            // denominators are monic with a nonzero value at t = 2
            let mut d = &p(&den) * &FieldElement::t();
            d = &d + &FieldElement::from_int(7);
            let base = &p(&num) * &FieldElement::t_pow(-shift);
            base.checked_div(&d).unwrap_or(base)
        },
    )
}

fn field_arithmetic(r: &mut TestRunner) -> Result<(), String> {
    finish(r.run(&(field_element(), field_element(), field_element()), |(a, b, c)| {
        ensure(&(&a + &b) * &c == &(&a * &c) + &(&b * &c), || "distributivity".into())?;
        ensure(&(&a - &b) + &b == a, || "subtraction".into())?;
        if b != FieldElement::from_int(0) {
            ensure(&a.checked_div(&b).unwrap() * &b == a, || "division".into())?;
        }
        let x = rat(5, 3);
        if let (Some(va), Some(vb)) = (a.eval(&x), b.eval(&x)) {
            ensure((&a * &b).eval(&x) == Some(va * vb), || "evaluation is multiplicative".into())?;
        }
        Ok(())
    }))
}

fn kernel_is_probability(r: &mut TestRunner) -> Result<(), String> {
    finish(r.run(&(partition(8, 8), positive_rational()), |(l, alpha)| {
        let k = transition_kernel(&l, &alpha);
        ensure(k.len() == l.addable_rows().len(), || "one entry per corner".into())?;
        ensure(k.iter().all(|(_, p)| *p > int(0)), || format!("positive masses at {l}"))?;
        let total: Rational = k.into_iter().map(|(_, p)| p).sum();
        ensure(total == int(1), || format!("kernel of {l} sums to {total}"))
    }))
}

fn box_update(r: &mut TestRunner) -> Result<(), String> {
    finish(r.run(&(partition(4, 4), 0usize..8), |(l, pick)| {
        let rows = l.addable_rows();
        let k = pick % rows.len();
        let row = rows[rows.len() - 1 - k];
        let d = anisotropic_symbolic(&l);
        let o = &d.outer()[k];
        let (m, _) = anisotropic_mr(&l, 6);
        let grown = l.add_box(row).unwrap();
        let want = anisotropic_mr(&grown, 6).0;
        ensure(add_box_update(&m, o, &FieldElement::gamma(), 6) == want, || format!("{l} + box in row {row}"))
    }))
}

fn kerov_evaluates_to_ch(r: &mut TestRunner) -> Result<(), String> {
    let ks = kerov_table();
    finish(r.run(&(0usize..64, 0usize..=TABLE_DEGREE, 0usize..64), |(i, n, j)| {
        let k = &ks[i % ks.len()];
        ensure(k.basis() == KerovBasis::R, || "cumulant basis".into())?;
        let parts = enumerate_partitions(n);
        let l = parts[j % parts.len()].clone();
        let (_, rs) = anisotropic_mr(&l, KEROV_DEGREE);
        let mut xs = vec![FieldElement::from_int(0)];
        xs.extend(rs.values);
        let want = book().ch_built(k.mu(), &l).unwrap();
        ensure(k.eval(&xs) == want, || format!("K{} at {l}", k.mu()))
    }))
}
