//! The check catalog. Each check records relations on a [`Ctx`]; labels
//! use the CLI expression syntax where possible.

use rand::Rng;

use super::{CheckInfo, Ctx};
use crate::braid::{BraidWord, Generator};
use crate::brunnian::{
    is_brunnian, random_pure_word_exact, sample_bd_with, sample_brun_with, sample_closure_with,
};
use crate::brunnian::in_z_pure;
use crate::error::Result;
use crate::maps::{commutator, conjugate, del, del_pure, delete_strand, theta, GeneratorMap};
use crate::pure::{a0, a0_letter, comb, full_twist, linking_vector, PureWord};

const fn entry(
    id: &'static str,
    title: &'static str,
    min_n: usize,
    max_n: usize,
    run: fn(&mut Ctx) -> Result<()>,
) -> CheckInfo {
    CheckInfo { id, title, min_n, max_n, control: false, run }
}

pub(super) static CATALOG: &[CheckInfo] = &[
    entry("C0", "A[0,j] standard word agrees with (A[1,j] ... A[n,j])^-1", 3, 6, c0),
    entry("C1", "braid and far-commutation relations", 3, 7, c1),
    entry("C2", "d_k kills the generators of Ker(d_k)", 3, 6, c2),
    entry("C3", "Brunnian samples have zero abelianization", 3, 4, c3),
    entry("C4", "symmetric-commutator samples are Brunnian", 3, 4, c4),
    entry("C5", "conjugation permutes the kernels of strand deletions", 3, 4, c5),
    entry("C6", "closure of A[i,j] lies in Ker(d_i) and Ker(d_j)", 3, 4, c6),
    entry("C7", "transversal conjugation sends A[i,n] to A[i,j]", 3, 5, c7),
    entry("C8", "boundary samples are cycles", 3, 3, c8),
    entry("C9", "action of w_n on the 0-row and on z", 3, 5, c9),
    entry("C10", "A[0,1] ... A[0,n] = z^-2 and z is central", 3, 6, c10),
    entry("C11", "del_n(A[0,1]) = z_{n-1}^2", 3, 5, c11),
    entry("C12", "theta_n(A[0,j]) = A[1,j]", 3, 5, c12),
    entry("C13", "del_n(A[0,j]) = 1 for j >= 2", 3, 5, c13),
    entry("C14", "conjugation of the 0-row by s_k^-1", 3, 5, c14),
    entry("C15", "del_{n-1} o del_n differs from del_{n-1} o d_1", 4, 5, c15),
    entry("C16", "del_n o Psi_s1 differs from theta_{n-1} o del_n", 3, 5, c16),
    entry("C17", "Delta-group identities on Ker(d_{n+1})", 3, 4, c17),
    entry("C18", "identities in P_3", 3, 3, c18),
    entry("C19", "the two forms of w_n agree", 3, 5, c19),
    entry("C20", "[x z^s, y z^t] = [x, y]", 3, 4, c20),
    entry("C21", "Brun_3 lies in Ker(d_2); [a^p, b^q] is Brunnian", 3, 3, c21),
    CheckInfo {
        id: "X11",
        title: "negative control: del_n(A[0,1]) = z_{n-1}^3 (must fail)",
        min_n: 3,
        max_n: 5,
        control: true,
        run: x11,
    },
];

fn letter(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    Ok(PureWord::letter(n, i.min(j), i.max(j))?.expand())
}

fn derived(j: usize, n: usize) -> Result<BraidWord> {
    Ok(a0_letter(j, n)?.expand())
}

fn z(n: usize) -> Result<BraidWord> {
    Ok(full_twist(n)?.expand())
}

fn s(n: usize, k: usize, sign: i32) -> BraidWord {
    BraidWord::from_parts_unchecked(n, vec![Generator::new(k, sign)])
}

fn mul(ws: &[&BraidWord]) -> Result<BraidWord> {
    BraidWord::product(ws[0].strands(), ws.iter().copied())
}

fn random_braid<R: Rng>(n: usize, max_len: usize, rng: &mut R) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| Generator::new(rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    BraidWord::from_parts_unchecked(n, letters)
}

fn c0(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for j in 1..=n {
        let column = (1..=n)
            .filter(|&i| i != j)
            .map(|i| letter(n, i, j))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&BraidWord> = column.iter().collect();
        let rhs = mul(&refs)?.inverse();
        ctx.equal(format!("A[0,{j}] == (prod over i != {j} of A[i,{j}])^-1"), &a0(j, n)?.expand(), &rhs)?;
    }
    // strand n circling all others: (s_{n-1} ... s_1 s_1 ... s_{n-1})^-1
    let mut loop_word: Vec<i32> = (1..n as i32).rev().collect();
    loop_word.extend(1..n as i32);
    let geometric = BraidWord::from_signed(n, &loop_word)?.inverse();
    ctx.equal(format!("A[0,{n}] == (s{} ... s1 s1 ... s{})^-1", n - 1, n - 1), &derived(n, n)?, &geometric)
}

fn c1(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for k in 1..n - 1 {
        let (a, b) = (k as i32, k as i32 + 1);
        ctx.equal(
            format!("s{a} s{b} s{a} == s{b} s{a} s{b}"),
            &BraidWord::from_signed(n, &[a, b, a])?,
            &BraidWord::from_signed(n, &[b, a, b])?,
        )?;
        ctx.differ(
            format!("s{a} s{b} != s{b} s{a}"),
            &BraidWord::from_signed(n, &[a, b])?,
            &BraidWord::from_signed(n, &[b, a])?,
        )?;
    }
    for i in 1..n as i32 {
        for j in i + 2..n as i32 {
            ctx.equal(
                format!("s{i} s{j} == s{j} s{i}"),
                &BraidWord::from_signed(n, &[i, j])?,
                &BraidWord::from_signed(n, &[j, i])?,
            )?;
        }
    }
    Ok(())
}

fn c2(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for k in 1..=n {
        for i in (1..=n).filter(|&i| i != k) {
            let g = letter(n, i, k)?;
            ctx.trivial(format!("d_{k}(A[{},{}]) == 1", i.min(k), i.max(k)), &delete_strand(&g, k)?)?;
        }
        // the remaining generators survive
        for j in 2..=n {
            for i in (1..j).filter(|&i| i != k && j != k) {
                let g = letter(n, i, j)?;
                let rest = delete_strand(&g, k)?;
                ctx.differ(format!("d_{k}(A[{i},{j}]) != 1"), &rest, &BraidWord::identity(n - 1))?;
            }
        }
    }
    Ok(())
}

const BRUN_SAMPLES: usize = 20;

fn c3(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..BRUN_SAMPLES {
        let w = sample_brun_with(ctx.n, &ctx.params, &mut ctx.rng)?;
        ctx.holds("sampled Brunnian word has zero abelianization", w.abelianize().is_zero(), &w);
        let linking = linking_vector(&w.expand())?;
        ctx.holds("sampled Brunnian braid has zero linking numbers", linking.is_zero(), &w);
    }
    Ok(())
}

fn c4(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..BRUN_SAMPLES {
        let w = sample_brun_with(ctx.n, &ctx.params, &mut ctx.rng)?;
        let ok = is_brunnian(&w.expand(), &ctx.oracle)?;
        ctx.holds("symmetric-commutator sample is Brunnian", ok, &w);
    }
    Ok(())
}

fn c5(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for _ in 0..10 {
        let beta = random_braid(n, 8, &mut ctx.rng);
        let perm = beta.permutation();
        for k in 1..=n {
            let target = perm.apply(k);
            for i in (1..=n).filter(|&i| i != k) {
                let image = conjugate(&letter(n, i, k)?, &beta)?;
                let what = format!("d_{target}(Psi_b(A[{},{}])) == 1 for b = {beta}", i.min(k), i.max(k));
                ctx.trivial(what, &delete_strand(&image, target)?)?;
            }
        }
    }
    Ok(())
}

fn c6(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for j in 2..=n {
        for i in 1..j {
            let g = PureWord::letter(n, i, j)?;
            for _ in 0..3 {
                let x = sample_closure_with(&g, &ctx.params, &mut ctx.rng)?.expand();
                ctx.trivial(format!("d_{i}(x) == 1 for x in <<A[{i},{j}]>>, x = {x}"), &delete_strand(&x, i)?)?;
                ctx.trivial(format!("d_{j}(x) == 1 for x in <<A[{i},{j}]>>, x = {x}"), &delete_strand(&x, j)?)?;
            }
        }
    }
    Ok(())
}

fn c7(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for j in 2..=n {
        let beta: Vec<i32> = (j as i32..n as i32).rev().collect();
        let beta = BraidWord::from_signed(n, &beta)?;
        for i in 1..j {
            ctx.equal(
                format!("Psi_b(A[{i},{n}]) == A[{i},{j}] for b = {beta}"),
                &conjugate(&letter(n, i, n)?, &beta)?,
                &letter(n, i, j)?,
            )?;
        }
    }
    Ok(())
}

fn c8(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..100 {
        let w = sample_bd_with(ctx.n, &ctx.params, &mut ctx.rng)?;
        let ok = in_z_pure(&w, &ctx.oracle)?;
        ctx.holds("boundary sample lies in Z_n", ok, &w);
    }
    Ok(())
}

fn c9(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    let w = GeneratorMap::w(n);
    for j in 1..n {
        let image = w.apply(&a0_letter(j, n)?)?.expand();
        ctx.equal(format!("w_{n}(A[0,{j}]) == A[{j},{n}]"), &image, &letter(n, j, n)?)?;
    }
    let image = w.apply(&a0_letter(n, n)?)?.expand();
    let rhs = mul(&[&derived(n, n)?, &z(n)?.pow(2)])?;
    ctx.equal(format!("w_{n}(A[0,{n}]) == A[0,{n}] z^2"), &image, &rhs)?;
    let image = w.apply(&full_twist(n)?)?.expand();
    ctx.equal(format!("w_{n}(z) == z^-1"), &image, &z(n)?.inverse())
}

fn c10(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    let row = (1..=n).map(|j| derived(j, n)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&BraidWord> = row.iter().collect();
    ctx.equal(format!("A[0,1] ... A[0,{n}] == z^-2"), &mul(&refs)?, &z(n)?.pow(-2))?;
    let twist = z(n)?;
    for i in 1..n {
        let si = s(n, i, 1);
        ctx.equal(format!("z s{i} == s{i} z"), &mul(&[&twist, &si])?, &mul(&[&si, &twist])?)?;
    }
    Ok(())
}

fn del_a01(ctx: &mut Ctx, power: i64) -> Result<()> {
    let n = ctx.n;
    let a01 = a0_letter(1, n)?;
    let target = z(n - 1)?.pow(power);
    ctx.equal(format!("del_{n}(A[0,1]) == z_{}^{power}", n - 1), &del(&a01)?, &target)?;
    ctx.equal(format!("del_{n}(A[0,1]) == z_{}^{power} (A-alphabet route)", n - 1), &del_pure(&a01)?.expand(), &target)
}

fn c11(ctx: &mut Ctx) -> Result<()> {
    del_a01(ctx, 2)
}

fn x11(ctx: &mut Ctx) -> Result<()> {
    del_a01(ctx, 3)
}

fn c12(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for j in 2..=n {
        let image = theta(&a0_letter(j, n)?)?.expand();
        ctx.equal(format!("theta_{n}(A[0,{j}]) == A[1,{j}]"), &image, &letter(n, 1, j)?)?;
    }
    Ok(())
}

fn c13(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for j in 2..=n {
        ctx.trivial(format!("del_{n}(A[0,{j}]) == 1"), &del(&a0_letter(j, n)?)?)?;
    }
    Ok(())
}

fn c14(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for k in 1..n {
        for j in 1..=n {
            let lhs = conjugate(&derived(j, n)?, &s(n, k, -1))?;
            let (rhs, form) = if k + 1 == j {
                let a = derived(j, n)?;
                (mul(&[&a.inverse(), &derived(j - 1, n)?, &a])?, format!("A[0,{j}]^-1 A[0,{}] A[0,{j}]", j - 1))
            } else if k == j {
                (derived(j + 1, n)?, format!("A[0,{}]", j + 1))
            } else {
                (derived(j, n)?, format!("A[0,{j}]"))
            };
            ctx.equal(format!("Psi_(s{k}^-1)(A[0,{j}]) == {form}"), &lhs, &rhs)?;
        }
    }
    Ok(())
}

fn c15(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    let a12 = PureWord::letter(n, 1, 2)?;
    let via_d1 = del_pure(&a12.delete_strand(1)?)?.expand();
    let via_del = del_pure(&del_pure(&a12)?)?.expand();
    ctx.differ(format!("(del_{} o d_1)(A[1,2]) != (del_{} o del_{n})(A[1,2])", n - 1, n - 1), &via_d1, &via_del)?;
    ctx.trivial(format!("(del_{} o d_1)(A[1,2]) == 1", n - 1), &via_d1)?;
    // the second composite lands in P_{n-2}, so its value is z_{n-2}^2
    ctx.equal(format!("(del_{} o del_{n})(A[1,2]) == z_{}^2", n - 1, n - 2), &via_del, &z(n - 2)?.pow(2))?;
    // same composite through the geometric del and combing
    let first = comb(&del(&a12)?, &ctx.oracle)?;
    ctx.equal(format!("(del_{} o del_{n})(A[1,2]) via combing", n - 1), &del(&first)?, &via_del)
}

fn c16(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    let a12 = letter(n, 1, 2)?;
    let psi = comb(&conjugate(&a12, &s(n, 1, 1))?, &ctx.oracle)?;
    let del_a12 = del(&PureWord::letter(n, 1, 2)?)?;
    ctx.equal(format!("del_{n}(Psi_s1(A[1,2])) == del_{n}(A[1,2])"), &del(&psi)?, &del_a12)?;
    let m = n - 1;
    let a01 = a0_letter(1, m)?;
    ctx.equal(format!("del_{n}(A[1,2]) == A[0,1] in P_{m}"), &del_a12, &a01.expand())?;
    let theta_a01 = theta(&a01)?;
    ctx.differ(format!("A[0,1] != theta_{m}(A[0,1]) in P_{m}"), &a01.expand(), &theta_a01.expand())?;
    if n >= 4 {
        ctx.trivial(format!("d_1(A[0,1]) == 1 in P_{}", m - 1), &a01.delete_strand(1)?.expand())?;
        let rhs = z(m - 1)?.pow(2);
        ctx.equal(format!("d_1(theta_{m}(A[0,1])) == z_{}^2", m - 1), &delete_strand(&theta_a01.expand(), 1)?, &rhs)?;
        ctx.differ(format!("z_{}^2 != 1", m - 1), &rhs, &BraidWord::identity(m - 1))?;
    } else {
        let a = letter(2, 1, 2)?;
        ctx.equal("A[0,1] == A[1,2]^-1 in P_2", &a01.expand(), &a.inverse())?;
        ctx.equal("theta_2(A[0,1]) == A[1,2]", &theta_a01.expand(), &a)?;
    }
    Ok(())
}

/// Faces of `G_n = Ker(d_{n+1}) ⊂ P_{n+1}`: `∂` at 0, strand deletion otherwise.
fn face(i: usize, w: &PureWord) -> Result<PureWord> {
    if i == 0 {
        del_pure(w)
    } else {
        w.delete_strand(i)
    }
}

fn c17(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    for k in 1..=n {
        let g = PureWord::letter(n + 1, k, n + 1)?;
        for j in 0..n {
            for i in 0..=j {
                let lhs = face(j, &face(i, &g)?)?.expand();
                let rhs = face(i, &face(j + 1, &g)?)?.expand();
                ctx.equal(format!("d_{j} d_{i} (A[{k},{}]) == d_{i} d_{} (A[{k},{}])", n + 1, j + 1, n + 1), &lhs, &rhs)?;
            }
        }
    }
    Ok(())
}

fn c18(ctx: &mut Ctx) -> Result<()> {
    let a = letter(3, 1, 2)?;
    let b = letter(3, 2, 3)?;
    let c = letter(3, 1, 3)?;
    let (ai, bi, ci) = (a.inverse(), b.inverse(), c.inverse());
    let comm = |x: &BraidWord, y: &BraidWord| commutator(x, y);

    ctx.equal("c^-1 a c == b a b^-1", &mul(&[&ci, &a, &c])?, &mul(&[&b, &a, &bi])?)?;
    ctx.equal("c a c^-1 == a^-1 b^-1 a b a", &mul(&[&c, &a, &ci])?, &mul(&[&ai, &bi, &a, &b, &a])?)?;
    ctx.equal("c^-1 b c == b a b a^-1 b^-1", &mul(&[&ci, &b, &c])?, &mul(&[&b, &a, &b, &ai, &bi])?)?;
    ctx.equal("c b c^-1 == a^-1 b a", &mul(&[&c, &b, &ci])?, &mul(&[&ai, &b, &a])?)?;

    let (s1, s2) = (s(3, 1, 1), s(3, 2, 1));
    ctx.equal("s1^-1 b s1 == c", &conjugate(&b, &s1)?, &c)?;
    ctx.equal("s2^-1 a s2 == b^-1 c b", &conjugate(&a, &s2)?, &mul(&[&bi, &c, &b])?)?;

    let ab = comm(&a, &b)?;
    let a01 = derived(1, 3)?;
    ctx.equal("A[0,1] == c^-1 a^-1", &a01, &mul(&[&ci, &ai])?)?;
    let ba = comm(&b, &a)?;
    let rhs = mul(&[&ba, &ba, &comm(&a, &b.pow(2))?])?;
    ctx.equal("[[a,b], A[0,1]] == [b,a]^2 [a,b^2]", &comm(&ab, &a01)?, &rhs)?;

    let psi1 = conjugate(&ab, &s1)?;
    ctx.equal("Psi_s1([a,b]) == [a,c]", &psi1, &comm(&a, &c)?)?;
    ctx.equal("Psi_s1([a,b]) == [a,b^-1]", &psi1, &comm(&a, &bi)?)?;
    let psi2 = conjugate(&ab, &s2)?;
    ctx.equal("Psi_s2([a,b]) == [b^-1 c b, b]", &psi2, &comm(&mul(&[&bi, &c, &b])?, &b)?)?;
    ctx.equal("Psi_s2([a,b]) == [a^-1,b]", &psi2, &comm(&ai, &b)?)?;

    let target = mul(&[&a, &b, &a, &bi, &ai, &ai])?;
    let ab_pure = PureWord::letter(3, 1, 2)?.commutator(&PureWord::letter(3, 2, 3)?)?;
    let w3 = GeneratorMap::w(3).apply(&ab_pure)?.expand();
    ctx.equal("w_3([a,b]) == a b a b^-1 a^-2", &w3, &target)?;
    let a02 = derived(2, 3)?;
    ctx.equal("[a, a A[0,2] a^-1] == [a, a b^-1 a^-2]", &comm(&a, &mul(&[&a, &a02, &ai])?)?, &comm(&a, &mul(&[&a, &bi, &ai, &ai])?)?)?;
    ctx.equal("[a, a A[0,2] a^-1] == a b a b^-1 a^-2", &comm(&a, &mul(&[&a, &a02, &ai])?)?, &target)?;
    let rhs = mul(&[&comm(&ai, &bi)?, &comm(&a.pow(-2), &bi)?.inverse()])?;
    ctx.equal("a b a b^-1 a^-2 == [a^-1,b^-1] [a^-2,b^-1]^-1", &target, &rhs)?;

    ctx.equal("chi_3([a,b]) == [a^-1,b^-1]", &ab.reflect(), &comm(&ai, &bi)?)?;

    // the half twist s1 s2 s1 swaps a and b
    let half = BraidWord::from_signed(3, &[1, 2, 1])?;
    ctx.equal("Psi_(s1 s2 s1)(a) == b", &conjugate(&a, &half)?, &b)?;
    ctx.equal("Psi_(s1 s2 s1)(b) == a", &conjugate(&b, &half)?, &a)
}

fn c19(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    let (first, second) = (GeneratorMap::w(n), GeneratorMap::w_conjugate_form(n));
    for i in 1..n {
        let g = PureWord::letter(n, i, n)?;
        ctx.equal(
            format!("w_{n}(A[{i},{n}]) == A[{i},{n}] A[0,{i}] A[{i},{n}]^-1"),
            &first.apply(&g)?.expand(),
            &second.apply(&g)?.expand(),
        )?;
    }
    Ok(())
}

fn c20(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    let twist = z(n)?;
    for _ in 0..10 {
        let x = random_pure_word_exact(n, ctx.rng.gen_range(1..=4), &mut ctx.rng).expand();
        let y = random_pure_word_exact(n, ctx.rng.gen_range(1..=4), &mut ctx.rng).expand();
        let (sx, ty) = (ctx.rng.gen_range(-1..=1), ctx.rng.gen_range(-1..=1));
        let lhs = commutator(&mul(&[&x, &twist.pow(sx)])?, &mul(&[&y, &twist.pow(ty)])?)?;
        ctx.equal(format!("[x z^{sx}, y z^{ty}] == [x, y] for x = {x}, y = {y}"), &lhs, &commutator(&x, &y)?)?;
    }
    Ok(())
}

fn c21(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..BRUN_SAMPLES {
        let w = sample_brun_with(3, &ctx.params, &mut ctx.rng)?.expand();
        ctx.trivial(format!("d_2(x) == 1 for Brunnian x = {w}"), &delete_strand(&w, 2)?)?;
    }
    let (a, b) = (letter(3, 1, 2)?, letter(3, 2, 3)?);
    for _ in 0..10 {
        let mut exponent = || {
            let e: i64 = ctx.rng.gen_range(1..=4);
            if ctx.rng.gen_bool(0.5) { e } else { -e }
        };
        let (p, q) = (exponent(), exponent());
        let x = commutator(&a.pow(p), &b.pow(q))?;
        let ok = is_brunnian(&x, &ctx.oracle)?;
        ctx.holds(format!("[a^{p}, b^{q}] is Brunnian"), ok, &x);
    }
    Ok(())
}
