//! Acceptance run: every criterion is checked exactly and reported on one line.

use std::process::ExitCode;
use std::sync::Arc;

use hopftrace::blocks::{dual_group, pairing_matches_block_dims, pairing_of_idempotents, split_center};
use hopftrace::comodule::Comodule;
use hopftrace::diag::{
    diag_convolve, diag_fourier, diag_integral, diag_phi, diag_trace_pair, DiagFunctional,
    FinGenAbelianGroup, FinSupportFunctional, LaurentElement,
};
use hopftrace::dual_trace::{convolution_algebra, is_linearly_reductive, separability_oracle};
use hopftrace::group::FiniteGroup;
use hopftrace::hopf::{alpha_p, cartier_dual, constant_group_scheme, mu_n, product, FiniteHopfAlgebra};
use hopftrace::integral::{fourier, invariant_integral, reynolds, verify_parseval, FourierTransform};
use hopftrace::linalg::{dot, unit_vector, Field, Matrix, Scalar, Vector};
use hopftrace::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIELDS: [Field; 5] =
    [Field::Rationals, Field::Prime(2), Field::Prime(3), Field::Prime(5), Field::Prime(7)];

struct Instance {
    name: String,
    algebra: FiniteHopfAlgebra,
}

type Outcome = Result<String, Vec<String>>;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Abelian groups of order at most 12 by invariant factors, the cyclic groups
/// of orders 2 to 12, and S_3.
fn sweep_groups() -> Vec<(String, FiniteGroup)> {
    let abelian: [&[usize]; 17] = [
        &[1], &[2], &[3], &[4], &[2, 2], &[5], &[6], &[7], &[8], &[2, 4], &[2, 2, 2],
        &[9], &[3, 3], &[10], &[11], &[12], &[2, 6],
    ];
    let mut out: Vec<(String, FiniteGroup)> = abelian
        .iter()
        .map(|orders| {
            let parts: Vec<String> = orders.iter().map(|d| format!("Z/{d}")).collect();
            (parts.join("x"), FiniteGroup::abelian(orders))
        })
        .collect();
    out.push(("S3".into(), FiniteGroup::symmetric(3)));
    out
}

fn sweep_instances() -> Vec<(Instance, u64)> {
    let mut out = Vec::new();
    for (name, g) in sweep_groups() {
        for f in FIELDS {
            out.push((
                Instance { name: format!("{name} over {f}"), algebra: constant_group_scheme(&g, f) },
                g.order() as u64,
            ));
        }
    }
    out
}

fn mu_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=8 {
        for f in FIELDS {
            out.push(Instance { name: format!("mu_{n} over {f}"), algebra: mu_n(n, f) });
        }
    }
    out
}

fn alpha_instances() -> Vec<Instance> {
    [2, 3, 5]
        .into_iter()
        .map(|p| Instance {
            name: format!("alpha_{p} over F_{p}"),
            algebra: alpha_p(Field::Prime(p)).expect("prime field"),
        })
        .collect()
}

fn contrast_instances() -> Vec<(Instance, bool)> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        let f = Field::Prime(p);
        out.push((Instance { name: format!("mu_{p} over F_{p}"), algebra: mu_n(p as usize, f) }, true));
        out.push((
            Instance {
                name: format!("Z/{p} over F_{p}"),
                algebra: constant_group_scheme(&FiniteGroup::cyclic(p as usize), f),
            },
            false,
        ));
    }
    out
}

fn all_instances() -> Vec<Instance> {
    let mut out: Vec<Instance> = sweep_instances().into_iter().map(|(i, _)| i).collect();
    out.extend(mu_instances());
    out.extend(alpha_instances());
    out.extend(contrast_instances().into_iter().map(|(i, _)| i));
    out
}

fn finish(checked: usize, failures: Vec<String>, what: &str) -> Outcome {
    if failures.is_empty() {
        Ok(format!("{checked} {what}"))
    } else {
        Err(failures)
    }
}

fn maschke_sweep() -> Outcome {
    let cases = sweep_instances();
    let mut failures = Vec::new();
    for (inst, order) in &cases {
        let expected = match inst.algebra.field() {
            Field::Rationals => true,
            Field::Prime(p) => gcd(*order, p) == 1,
        };
        let got = is_linearly_reductive(&inst.algebra).reductive;
        if got != expected {
            failures.push(format!("{}: expected reductive={expected}, got {got}", inst.name));
        }
    }
    finish(cases.len(), failures, "cases")
}

fn oracle_agreement() -> Outcome {
    let cases = all_instances();
    let mut failures = Vec::new();
    for inst in &cases {
        let gram = is_linearly_reductive(&inst.algebra).reductive;
        let oracle = separability_oracle(&convolution_algebra(&inst.algebra));
        if gram != oracle {
            failures.push(format!("{}: trace form says {gram}, separability says {oracle}", inst.name));
        }
    }
    finish(cases.len(), failures, "instances")
}

fn cartier_contrast() -> Outcome {
    let cases = contrast_instances();
    let mut failures = Vec::new();
    for (inst, expected) in &cases {
        let got = is_linearly_reductive(&inst.algebra).reductive;
        if got != *expected {
            failures.push(format!("{}: expected reductive={expected}, got {got}", inst.name));
        }
    }
    finish(cases.len(), failures, "instances")
}

fn parseval() -> Outcome {
    let cases = all_instances();
    let mut failures = Vec::new();
    for inst in &cases {
        let a = &inst.algebra;
        if is_linearly_reductive(a).reductive {
            match verify_parseval(a) {
                Ok(r) if r.holds() => {}
                Ok(r) => failures.push(format!("{}: {r:?}", inst.name)),
                Err(e) => failures.push(format!("{}: {e}", inst.name)),
            }
        } else {
            match fourier(a, a.unit()) {
                Err(Error::NoInvariantIntegral) => {}
                other => failures.push(format!("{}: expected the missing-integral error, got {other:?}", inst.name)),
            }
        }
    }
    finish(cases.len(), failures, "instances")
}

/// Lexicographic permutations of `0..n`, matching `FiniteGroup::symmetric`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

fn permutation_matrix(f: Field, p: &[usize]) -> Matrix {
    let n = p.len();
    let mut m = Matrix::zeros(f, n, n);
    for (i, &j) in p.iter().enumerate() {
        m.set(j, i, f.one());
    }
    m
}

fn character_pairs() -> Vec<(String, Comodule)> {
    let mut out = Vec::new();
    for f in [Field::Rationals, Field::Prime(5), Field::Prime(7)] {
        let z2 = Arc::new(constant_group_scheme(&FiniteGroup::cyclic(2), f));
        let sign =
            Comodule::one_dimensional(z2.clone(), &[f.one(), f.from_i64(-1)]).expect("sign is grouplike");
        out.push((format!("Z/2 sign over {f}"), sign.clone()));
        out.push((format!("Z/2 sign (x) sign over {f}"), sign.tensor_product(&sign).expect("same algebra")));
        out.push((format!("Z/2 regular over {f}"), Comodule::regular(z2.clone())));
        out.push((
            format!("Z/2 trivial + sign over {f}"),
            Comodule::trivial(z2.clone()).direct_sum(&sign).expect("same algebra"),
        ));

        let z3 = Arc::new(constant_group_scheme(&FiniteGroup::cyclic(3), f));
        let reg3 = Comodule::regular(z3.clone());
        out.push((format!("Z/3 regular over {f}"), reg3.clone()));
        out.push((format!("Z/3 dual regular over {f}"), reg3.dual()));
        out.push((format!("Z/3 regular (x) regular over {f}"), reg3.tensor_product(&reg3).expect("same algebra")));
        out.push((format!("Z/3 trivial over {f}"), Comodule::trivial(z3)));

        let s3 = FiniteGroup::symmetric(3);
        let a = Arc::new(constant_group_scheme(&s3, f));
        let mats: Vec<Matrix> = permutations(3).iter().map(|p| permutation_matrix(f, p)).collect();
        let perm = Comodule::from_group_action(a.clone(), &s3, &mats).expect("permutation representation");
        out.push((format!("S3 on 3 points over {f}"), perm.clone()));
        out.push((format!("S3 on pairs of points over {f}"), perm.tensor_product(&perm).expect("same algebra")));
        out.push((format!("S3 dual permutation over {f}"), perm.dual()));

        let m4 = Arc::new(mu_n(4, f));
        let x = m4.basis(1);
        let chi = Comodule::one_dimensional(m4.clone(), &x).expect("x is grouplike");
        out.push((format!("mu_4 weight 1 over {f}"), chi.clone()));
        out.push((format!("mu_4 weight 1 (x) its dual over {f}"), chi.tensor_product(&chi.dual()).expect("same algebra")));
        out.push((format!("mu_4 regular over {f}"), Comodule::regular(m4)));
    }
    out
}

fn character_integrals() -> Outcome {
    let pairs = character_pairs();
    let mut failures = Vec::new();
    for (name, v) in &pairs {
        let a = v.algebra();
        let Some(w_g) = invariant_integral(a).ok().and_then(|r| r.normalized) else {
            failures.push(format!("{name}: expected a linearly reductive group"));
            continue;
        };
        let lhs = dot(&w_g, &v.character());
        let direct = v.fixed_space().len();
        let rhs = a.field().from_u64(direct as u64);
        if lhs != rhs || v.invariants_dim() != direct {
            failures.push(format!("{name}: w_G(chi) = {lhs}, dim V^G = {direct}"));
        }
    }
    if pairs.len() < 10 {
        failures.push(format!("only {} pairs", pairs.len()));
    }
    finish(pairs.len(), failures, "pairs")
}

fn block_pairing() -> Outcome {
    let z3 = FiniteGroup::cyclic(3);
    let cases: Vec<(&str, FiniteHopfAlgebra, Option<Vec<usize>>)> = vec![
        ("F_7[Z/3]", constant_group_scheme(&z3, Field::Prime(7)), Some(vec![1, 1, 1])),
        ("F_5[Z/3]", constant_group_scheme(&z3, Field::Prime(5)), Some(vec![1, 2])),
        ("mu_6 over F_5", mu_n(6, Field::Prime(5)), Some(vec![1; 6])),
        ("mu_6 over F_7", mu_n(6, Field::Prime(7)), Some(vec![1; 6])),
    ];
    let mut failures = Vec::new();
    for (name, a, dims) in &cases {
        let c = convolution_algebra(a);
        let b = match split_center(&c) {
            Ok(b) => b,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        let pairing = pairing_of_idempotents(&b, &c.trace_form_gram()).expect("same algebra");
        if !pairing_matches_block_dims(&b, &pairing) {
            failures.push(format!("{name}: pairing {:?} vs dims {:?}", pairing.to_rows(), b.block_dims));
        }
        if let Some(d) = dims {
            if &b.block_dims != d {
                failures.push(format!("{name}: block dims {:?}, expected {d:?}", b.block_dims));
            }
        }
    }
    finish(cases.len(), failures, "algebras")
}

fn discrete_dual() -> Outcome {
    let cases: Vec<Instance> =
        all_instances().into_iter().filter(|i| i.algebra.field() != Field::Rationals).collect();
    let mut failures = Vec::new();
    for inst in &cases {
        let reductive = is_linearly_reductive(&inst.algebra).reductive;
        match dual_group(&inst.algebra) {
            Ok(s) if s.discrete == reductive => {
                if s.discrete && s.block_dims.as_ref().map(|d| d.iter().sum::<usize>()) != Some(inst.algebra.dim()) {
                    failures.push(format!("{}: block dims do not add up", inst.name));
                }
            }
            Ok(s) => failures.push(format!("{}: discrete={}, reductive={reductive}", inst.name, s.discrete)),
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
    }
    finish(cases.len(), failures, "instances")
}

fn random_functional(rng: &mut ChaCha8Rng, g: &FinGenAbelianGroup, f: Field) -> FinSupportFunctional {
    let terms = rng.gen_range(0..6);
    let entries: Vec<(Vec<i64>, Scalar)> = (0..terms)
        .map(|_| {
            let mut m: Vec<i64> = (0..g.free_rank()).map(|_| rng.gen_range(-20..=20)).collect();
            m.extend(g.torsion().iter().map(|&d| rng.gen_range(0..d as i64)));
            let value = f.from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=6)).expect("nonzero denominator");
            (m, value)
        })
        .collect();
    FinSupportFunctional::from_entries(g, f, entries).expect("valid elements")
}

fn diag_checks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let groups = [
        ("Z", FinGenAbelianGroup::new(1, &[]).expect("group")),
        ("Z^2", FinGenAbelianGroup::new(2, &[]).expect("group")),
        ("Z/6", FinGenAbelianGroup::new(0, &[6]).expect("group")),
        ("ZxZ/4", FinGenAbelianGroup::new(1, &[4]).expect("group")),
    ];
    let f = Field::Rationals;
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, g) in &groups {
        for trial in 0..100 {
            let w = random_functional(&mut rng, g, f);
            if diag_fourier(&diag_phi(&w)) != w {
                failures.push(format!("{name} #{trial}: F(phi(w)) != w"));
            }
            let a = diag_phi(&w);
            if diag_phi(&diag_fourier(&a)) != a {
                failures.push(format!("{name} #{trial}: phi(F(a)) != a"));
            }
            checked += 1;
        }
    }
    for f in [Field::Rationals, Field::Prime(5)] {
        for n in [2usize, 3] {
            if let Err(msg) = mu_cross_check(n, f) {
                failures.push(msg);
            }
        }
    }
    finish(checked, failures, "functionals, plus mu_2 and mu_3 cross-checks")
}

/// `x^k` of `K[Z/n]` is basis vector `k` of `mu_n`, and the indicator of `k` is dual basis vector `k`.
fn mu_cross_check(n: usize, f: Field) -> Result<(), String> {
    let g = FinGenAbelianGroup::new(0, &[n as u64]).map_err(|e| e.to_string())?;
    let a = mu_n(n, f);
    let c = convolution_algebra(&a);
    let to_vec = |w: &FinSupportFunctional| -> Vector { (0..n).map(|k| w.value(&[k as i64])).collect() };
    let indicator = |k: usize| FinSupportFunctional::indicator(&g, &[k as i64], f.one()).expect("element");
    let tag = format!("mu_{n} over {f}");

    let w_g = invariant_integral(&a).map_err(|e| e.to_string())?.normalized;
    if w_g != Some(to_vec(&diag_integral(&g, f))) {
        return Err(format!("{tag}: integrals differ"));
    }
    let gram = c.trace_form_gram();
    let ft = FourierTransform::new(&a).map_err(|e| e.to_string())?;
    for i in 0..n {
        let xi = LaurentElement::monomial(&g, &[i as i64], f.one()).expect("element");
        if to_vec(&diag_fourier(&xi)) != ft.apply(&a.basis(i)).map_err(|e| e.to_string())? {
            return Err(format!("{tag}: Fourier transforms differ at x^{i}"));
        }
        for j in 0..n {
            let pair = diag_trace_pair(&DiagFunctional::Finite(indicator(i)), &indicator(j)).expect("same group");
            if &pair != gram.entries().get(i, j) {
                return Err(format!("{tag}: trace pairing differs at ({i}, {j})"));
            }
            let prod = diag_convolve(&indicator(i), &indicator(j)).expect("same group");
            if to_vec(&prod) != c.multiply(&unit_vector(f, n, i), &unit_vector(f, n, j)) {
                return Err(format!("{tag}: products differ at ({i}, {j})"));
            }
        }
    }
    Ok(())
}

fn structural_family() -> Vec<Instance> {
    let mut out = Vec::new();
    for f in FIELDS {
        let groups = [
            ("Z/2", FiniteGroup::cyclic(2)),
            ("Z/3", FiniteGroup::cyclic(3)),
            ("Z/2xZ/2", FiniteGroup::abelian(&[2, 2])),
            ("Z/6", FiniteGroup::cyclic(6)),
            ("S3", FiniteGroup::symmetric(3)),
        ];
        for (name, g) in groups {
            out.push(Instance { name: format!("{name} over {f}"), algebra: constant_group_scheme(&g, f) });
        }
        for n in [1, 2, 3, 4] {
            out.push(Instance { name: format!("mu_{n} over {f}"), algebra: mu_n(n, f) });
        }
        let z3 = constant_group_scheme(&FiniteGroup::cyclic(3), f);
        out.push(Instance {
            name: format!("mu_2 x Z/2 over {f}"),
            algebra: product(&mu_n(2, f), &constant_group_scheme(&FiniteGroup::cyclic(2), f)).expect("same field"),
        });
        out.push(Instance {
            name: format!("Cartier dual of Z/3 over {f}"),
            algebra: cartier_dual(&z3).expect("commutative group"),
        });
        if let Field::Prime(p) = f {
            if p <= 5 {
                let a = alpha_p(f).expect("prime field");
                out.push(Instance { name: format!("alpha_{p} x mu_2 over {f}"), algebra: product(&a, &mu_n(2, f)).expect("same field") });
                out.push(Instance { name: format!("alpha_{p} over {f}"), algebra: a });
            }
        }
    }
    out
}

fn structural() -> Outcome {
    let family = structural_family();
    let mut failures = Vec::new();
    for inst in &family {
        let a = &inst.algebra;
        let n = a.dim();
        let fail = |what: &str| format!("{}: {what}", inst.name);
        if !a.verify_axioms().all_passed() {
            failures.push(fail("Hopf axioms"));
            continue;
        }
        let c = convolution_algebra(a);
        let gram = c.trace_form_gram();
        if !gram.entries().is_symmetric() {
            failures.push(fail("Gram matrix not symmetric"));
        }
        let phi = c.phi_matrix(&gram);
        let varphi = c.varphi_matrix(&gram);
        if varphi != phi.transpose() {
            failures.push(fail("varphi is not the transpose of phi"));
        }
        for i in 0..n {
            for j in 0..n {
                let (u, v) = (c.basis(i), c.basis(j));
                let lhs = dot(&c.polarity_varphi(&gram, &u).expect("basis"), &v);
                let rhs = dot(&u, &c.polarity_phi(&gram, &v).expect("basis"));
                if lhs != rhs {
                    failures.push(fail("polarities disagree on a pair"));
                }
                let w = c.polarity_varphi(&gram, &u).expect("basis");
                if c.polarity_varphi(&gram, &c.multiply(&v, &u)).expect("dim") != c.times_functional(&v, &w)
                    || c.polarity_varphi(&gram, &c.multiply(&u, &v)).expect("dim") != c.functional_times(&w, &v)
                {
                    failures.push(fail("varphi is not a bimodule map"));
                }
            }
        }
        let Ok(ft) = FourierTransform::new(a) else { continue };
        for i in 0..n {
            let x = a.basis(i);
            let fx = ft.apply(&x).expect("basis");
            for j in 0..n {
                let w = c.basis(j);
                if ft.apply(&c.act_left_on_coordinate(&w, &x)).expect("dim") != c.multiply(&w, &fx)
                    || ft.apply(&c.act_right_on_coordinate(&x, &w)).expect("dim") != c.multiply(&fx, &w)
                {
                    failures.push(fail("Fourier transform is not a bimodule map"));
                }
            }
        }
        let algebra = Arc::new(a.clone());
        let reg = Comodule::regular(algebra.clone());
        let mut comodules = vec![reg.clone(), reg.dual(), Comodule::trivial(algebra.clone())];
        if n <= 4 {
            comodules.push(reg.tensor_product(&reg).expect("same algebra"));
        }
        for v in &comodules {
            if !v.verify().all_passed() {
                failures.push(fail("comodule laws"));
                continue;
            }
            for k in 0..v.dim() {
                let e = unit_vector(a.field(), v.dim(), k);
                let once = reynolds(a, v, &e).expect("reductive");
                if reynolds(a, v, &once).expect("reductive") != once {
                    failures.push(fail("Reynolds operator not idempotent"));
                }
                if !v.is_coinvariant(&once) {
                    failures.push(fail("Reynolds image not coinvariant"));
                }
            }
        }
    }
    finish(family.len(), failures, "algebras")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 Maschke sweep", maschke_sweep),
        ("2 trace form vs separability oracle", oracle_agreement),
        ("3 Cartier contrast pair", cartier_contrast),
        ("4 Parseval", parseval),
        ("5 integral of characters counts invariants", character_integrals),
        ("6 block pairing", block_pairing),
        ("7 discrete dual iff reductive", discrete_dual),
        ("8 diagonalizable groups", diag_checks),
        ("9 structural properties", structural),
    ];
    let mut all_ok = true;
    for (name, check) in criteria {
        match check() {
            Ok(summary) => println!("PASS criterion {name}: {summary}"),
            Err(failures) => {
                all_ok = false;
                println!("FAIL criterion {name}: {} failure(s)", failures.len());
                for f in failures.iter().take(10) {
                    println!("    {f}");
                }
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
