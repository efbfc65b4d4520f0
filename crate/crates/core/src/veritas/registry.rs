use std::collections::BTreeSet;
use std::time::Instant;

use serde_json::{json, Value};

use super::context::Ctx;
use super::{ClaimResult, Provenance, VeritasError};
use crate::curvecat::{enumerate_points, fiber_census, rr_basis, suzuki_auxiliaries, Coordinate, PlaneCurveModel, Term};
use crate::ffun::{FunctionField, HasseTable};
use crate::galois::{make_field, Elem};
use crate::numsg::{suzuki_gap_ledger, suzuki_point_semigroup, weighted_order_set, SemigroupDescriptor};
use crate::poly::Poly;
use crate::svengine::local_jorders;
use crate::zetabounds::{castelnuovo_limit, hasse_weil, ihara_genus_cap, is_maximal, lewittes_bound, HPolynomial};

use Provenance::{Derived, Reference, Trivial};

type Eval = fn(&Ctx) -> Result<Value, VeritasError>;

/// One registry row.
pub struct ClaimDef {
    pub id: &'static str,
    /// Descriptive location of the claim in the source text.
    pub anchor: &'static str,
    pub provenance: Provenance,
    pub(crate) applies: fn(&Ctx) -> bool,
    pub(crate) inputs: fn(&Ctx) -> String,
    pub(crate) expected: fn(&Ctx) -> Value,
    pub(crate) compute: Eval,
}

impl ClaimDef {
    pub(crate) fn run(&self, ctx: &Ctx) -> ClaimResult {
        let start = Instant::now();
        let expected = (self.expected)(ctx);
        let (computed, pass) = match (self.compute)(ctx) {
            Ok(v) => {
                let pass = v == expected;
                (v, pass)
            }
            Err(e) => (json!({ "error": e.to_string() }), false),
        };
        ClaimResult {
            suite: ctx.suite.to_string(),
            id: self.id.to_string(),
            anchor: self.anchor.to_string(),
            inputs: (self.inputs)(ctx),
            expected,
            provenance: self.provenance,
            computed,
            pass,
            runtime_ms: start.elapsed().as_millis(),
        }
    }
}

pub fn claim_table() -> &'static [ClaimDef] {
    CLAIMS
}

fn curve_id(c: &Ctx) -> String {
    c.curve.id().to_string()
}

fn hermitian_like(c: &Ctx) -> bool {
    c.is_hermitian() || c.is_quotient()
}

/// Distinct j-sequences among the rational points, and how many points.
fn j_summary(c: &Ctx) -> Result<Value, VeritasError> {
    let rep = c.report()?;
    let js: BTreeSet<Vec<u64>> = rep.points.iter().map(|p| p.j.clone()).collect();
    Ok(json!({ "j_values": js, "points": rep.points.len() }))
}

/// j-sequences at the first ten points over `F_(q^3)` not over `F_q`.
fn nonrational_sample(c: &Ctx) -> Result<Value, VeritasError> {
    let d = c.l() + 1;
    let basis = rr_basis(&c.curve, d)?.functions();
    let en = enumerate_points(&c.curve, 3, c.mode)?;
    let k = en.extension.big();
    let base = c.curve.field().degree();
    let sample: Vec<(Elem, Elem)> =
        en.affine().filter(|&(a, b)| !(k.in_subfield(a, base) && k.in_subfield(b, base))).take(10).collect();
    let mut js = BTreeSet::new();
    for &(a, b) in &sample {
        js.insert(local_jorders(&basis, &en.extension, a, b, d)?);
    }
    Ok(json!({ "j_values": js, "points": sample.len() }))
}

/// `y^p + y = x^(l+1)` over `F_(l^2)`, with `x` of degree `p`.
fn additive_model(c: &Ctx) -> Result<PlaneCurveModel, VeritasError> {
    let f = c.curve.field();
    let p = f.characteristic();
    let field = make_field(p, f.degree())?;
    let minus_one = field.neg(Elem::ONE).0;
    let terms = vec![
        Term { a: 0, b: p, coeff: 1 },
        Term { a: 0, b: 1, coeff: 1 },
        Term { a: c.l() as u32 + 1, b: 0, coeff: minus_one },
    ];
    Ok(PlaneCurveModel::custom(&format!("additive:{}", c.l()), field, terms, None)?)
}

fn suzuki_checks(c: &Ctx) -> Result<(bool, bool), VeritasError> {
    let (q0, q) = c.q0_q();
    let ff = c.curve.function_field()?;
    let aux = suzuki_auxiliaries(&c.curve)?;
    let table = HasseTable::new(ff, 1)?;
    let dy_ok = *table.dy(1)? == Poly::monomial(Elem::ONE, q0 as usize);
    let x = ff.x();
    let frob_x = x.pow(q).sub(&x);
    let mut rows_ok = true;
    for f in [ff.y(), aux.z, aux.w] {
        let d1 = table.derive(&f, 1)?;
        rows_ok &= f.pow(q).sub(&f) == d1.mul(&frob_x);
    }
    Ok((dy_ok, rows_ok))
}

/// On `y^q - y = x^(2q0)(x^q - x)`, `z = y^q0 - x^(q0+1)` satisfies
/// `z^q - z = x^q0 (x^q - x)`.
fn z_substitution(c: &Ctx) -> Result<bool, VeritasError> {
    let (q0, q) = c.q0_q();
    let f = c.curve.field();
    let rhs = Poly::monomial(Elem::ONE, (q + 2 * q0) as usize).sub(&Poly::monomial(Elem::ONE, (2 * q0 + 1) as usize), f);
    let ff = FunctionField::artin_schreier(f, q, f.neg(Elem::ONE), &rhs)?;
    let x = ff.x();
    let z = ff.y().pow(q0).sub(&x.pow(q0 + 1));
    Ok(z.pow(q).sub(&z) == x.pow(q0).mul(&x.pow(q).sub(&x)))
}

static CLAIMS: &[ClaimDef] = &[
    // Hermitian curve y^l + y = x^(l+1) over F_(l^2).
    ClaimDef {
        id: "hermitian.count.n1",
        anchor: "Hermitian curve: rational points attain the Hasse-Weil bound",
        provenance: Derived,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |c| json!(c.l().pow(3) + 1),
        compute: |c| Ok(json!(c.count(1)?)),
    },
    ClaimDef {
        id: "hermitian.genus",
        anchor: "Maximal curves: genus l(l-1)/2 of the Hermitian curve",
        provenance: Reference,
        applies: |c| c.is_hermitian(),
        inputs: |c| format!("H(P_inf) = <{}, {}>", c.l(), c.l() + 1),
        expected: |c| json!(c.l() * (c.l() - 1) / 2),
        compute: |c| Ok(json!(SemigroupDescriptor::new(&[c.l(), c.l() + 1])?.genus())),
    },
    ClaimDef {
        id: "hermitian.maximal",
        anchor: "Maximal curves: N = q + 2g sqrt(q) + 1",
        provenance: Reference,
        applies: hermitian_like,
        inputs: curve_id,
        expected: |_| json!(true),
        compute: |c| Ok(json!(is_maximal(c.count(1)?, c.q(), c.genus()))),
    },
    ClaimDef {
        id: "hermitian.ihara",
        anchor: "Introduction: largest genus of a maximal curve is l(l-1)/2",
        provenance: Reference,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |c| json!(c.genus()),
        compute: |c| Ok(json!(ihara_genus_cap(c.l()))),
    },
    ClaimDef {
        id: "hermitian.orders.eps",
        anchor: "Maximal curves: D-orders (0, 1, l) of |(l+1)P0|",
        provenance: Reference,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |c| json!([0, 1, c.l()]),
        compute: |c| Ok(json!(c.report()?.eps)),
    },
    ClaimDef {
        id: "hermitian.orders.nu",
        anchor: "Maximal curves: Frobenius orders (0, l)",
        provenance: Reference,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |c| json!([0, c.l()]),
        compute: |c| Ok(json!(c.report()?.nu)),
    },
    ClaimDef {
        id: "hermitian.orders.index",
        anchor: "Frobenius orders: nu is eps with the entry at index I removed",
        provenance: Derived,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |_| json!({ "index": 1, "deletes_one": true }),
        compute: |c| {
            let r = c.report()?;
            Ok(json!({ "index": r.index_i, "deletes_one": r.checks.nu_deletes_one }))
        },
    },
    ClaimDef {
        id: "hermitian.jorders.rational",
        anchor: "Maximal curves: (D,P)-orders (0, 1, l+1) at rational points",
        provenance: Reference,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |c| json!({ "j_values": [[0, 1, c.l() + 1]], "points": c.l().pow(3) + 1 }),
        compute: j_summary,
    },
    ClaimDef {
        id: "hermitian.jorders.nonrational",
        anchor: "Maximal curves: (D,P)-orders (0, 1, l) off X(F_(l^2))",
        provenance: Reference,
        applies: |c| c.is_hermitian(),
        inputs: |c| format!("{}, first 10 points over F_(l^6) not over F_(l^2)", c.curve.id()),
        expected: |c| json!({ "j_values": [[0, 1, c.l()]], "points": 10 }),
        compute: nonrational_sample,
    },
    ClaimDef {
        id: "hermitian.divisor.deg_r",
        anchor: "Maximal curves: supp(R) = X(F_(l^2)), deg R = #X(F_(l^2))",
        provenance: Derived,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |c| json!(c.l().pow(3) + 1),
        compute: |c| Ok(json!(c.report()?.deg_r)),
    },
    ClaimDef {
        id: "hermitian.divisor.deg_s",
        anchor: "Frobenius divisor: deg S = 2 #X(F_(l^2)) on the Hermitian curve",
        provenance: Derived,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |c| json!(2 * (c.l().pow(3) + 1)),
        compute: |c| Ok(json!(c.report()?.deg_s)),
    },
    ClaimDef {
        id: "hermitian.census",
        anchor: "Maximal curves: supp(R) = X(F_(l^2)) with v_P(R) = 1",
        provenance: Derived,
        applies: |c| c.is_hermitian(),
        inputs: |c| format!("{}, points over F_(q^k), k <= 2", c.curve.id()),
        expected: |c| json!({ "fully_accounted": true, "support": c.l().pow(3) + 1, "values": [1] }),
        compute: |c| {
            let census = c.report()?.census.as_ref().ok_or_else(|| VeritasError::Computation("no census".into()))?;
            let values: BTreeSet<i64> = census.support.iter().map(|p| p.v_r).collect();
            Ok(json!({ "fully_accounted": census.fully_accounted, "support": census.support.len(), "values": values }))
        },
    },
    ClaimDef {
        id: "hermitian.zeta.n2",
        anchor: "h-polynomial (t + l)^(2g): count over F_(l^4)",
        provenance: Derived,
        applies: hermitian_like,
        inputs: curve_id,
        expected: |c| json!(HPolynomial::for_curve(&c.curve).and_then(|h| h.predicted_count(2)).ok()),
        compute: |c| Ok(json!(c.count(2)? as i128)),
    },
    ClaimDef {
        id: "hermitian.lewittes",
        anchor: "Lewittes bound #X(F_q) <= 1 + q m1(P), tight with m1 = l",
        provenance: Derived,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |c| json!(c.l().pow(3) + 1),
        compute: |c| {
            let m1: BTreeSet<u64> = c.report()?.points.iter().map(|p| p.m1).collect();
            match m1.iter().collect::<Vec<_>>().as_slice() {
                [m] => Ok(json!(lewittes_bound(c.q(), **m))),
                _ => Ok(json!({ "m1_values": m1 })),
            }
        },
    },
    ClaimDef {
        id: "hermitian.castelnuovo",
        anchor: "Castelnuovo: 2g <= (d - 1 - (r-1)/2)^2/(r-1) for d = l+1, r = 2",
        provenance: Trivial,
        applies: |c| c.is_hermitian(),
        inputs: curve_id,
        expected: |_| json!(true),
        compute: |c| {
            let lim = castelnuovo_limit(c.l() + 1, 2)?;
            Ok(json!(lim >= num_rational::Rational64::from_integer(2 * c.genus() as i64)))
        },
    },
    ClaimDef {
        id: "hermitian.weierstrass_set",
        anchor: "Maximal curves: {a + b l : a + b <= l - 2} has cardinality g",
        provenance: Reference,
        applies: |c| c.is_hermitian(),
        inputs: |c| format!("weights (1, {}), budget {}", c.l(), c.l() - 2),
        expected: |c| json!(c.genus()),
        compute: |c| Ok(json!(weighted_order_set(&[1, c.l()], (c.l() - 2) as u32).len())),
    },
    ClaimDef {
        id: "hermitian.additive.fibers",
        anchor: "Case mn = l: every fiber of x has m rational points; l^2 + 2lg = l^2 m",
        provenance: Reference,
        applies: |c| c.is_hermitian() && c.curve.field().degree() > 2,
        inputs: |c| format!("y^p + y = x^({}) over F_({})", c.l() + 1, c.q()),
        expected: |_| json!({ "all_full_and_rational": true, "identity_holds": true }),
        compute: |c| {
            let census = fiber_census(&additive_model(c)?, Coordinate::X)?;
            Ok(json!({ "all_full_and_rational": census.all_full_and_rational, "identity_holds": census.identity_holds }))
        },
    },
    // Quotients y^l + y = x^m, m = (l+1)/n.
    ClaimDef {
        id: "quotient.genus",
        anchor: "Quotient curves: g = ((l-1)/2)((l+1)/n - 1)",
        provenance: Reference,
        applies: |c| c.is_quotient(),
        inputs: |c| format!("H(P_inf) = <{}, {}>", c.quotient_degree(), c.l()),
        expected: |c| json!((c.l() - 1) * (c.quotient_degree() - 1) / 2),
        compute: |c| Ok(json!(SemigroupDescriptor::new(&[c.quotient_degree(), c.l()])?.genus())),
    },
    ClaimDef {
        id: "quotient.count.n1",
        anchor: "Quotient curves: maximal over F_(l^2)",
        provenance: Derived,
        applies: |c| c.is_quotient(),
        inputs: curve_id,
        expected: |c| json!(c.q() + 1 + 2 * c.genus() * c.l()),
        compute: |c| Ok(json!(c.count(1)?)),
    },
    ClaimDef {
        id: "quotient.ihara",
        anchor: "Introduction: genus of a maximal curve is at most l(l-1)/2",
        provenance: Trivial,
        applies: |c| c.is_quotient(),
        inputs: curve_id,
        expected: |_| json!(true),
        compute: |c| Ok(json!(c.genus() <= ihara_genus_cap(c.l()))),
    },
    // Suzuki curve y^q - y = x^q0 (x^q - x).
    ClaimDef {
        id: "suzuki.count.n1",
        anchor: "Suzuki curve: #X(F_q) = q^2 + 1",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| json!(c.q() * c.q() + 1),
        compute: |c| Ok(json!(c.count(1)?)),
    },
    ClaimDef {
        id: "suzuki.count.n2",
        anchor: "Suzuki-Tits ovoid section: #X(F_(q^2)) = #X(F_q)",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| json!(c.q() * c.q() + 1),
        compute: |c| Ok(json!(c.count(2)?)),
    },
    ClaimDef {
        id: "suzuki.count.n3",
        anchor: "Suzuki-Tits ovoid section: #X(F_(q^3)) = #X(F_q)",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| json!(c.q() * c.q() + 1),
        compute: |c| Ok(json!(c.count(3)?)),
    },
    ClaimDef {
        id: "suzuki.count.n4",
        anchor: "Suzuki curve: h-polynomial (t^2 + 2q0 t + q)^g, count over F_(q^4)",
        provenance: Derived,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| json!(HPolynomial::for_curve(&c.curve).and_then(|h| h.predicted_count(4)).ok()),
        compute: |c| Ok(json!(c.count(4)? as i128)),
    },
    ClaimDef {
        id: "suzuki.semigroup.genus",
        anchor: "Suzuki curve: #(N \\ H) = g = q0(q-1) for H = <q, q+q0, q+2q0, q+2q0+1>",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: |c| format!("H = {:?}", suzuki_point_semigroup(c.s())),
        expected: |c| {
            let (q0, q) = c.q0_q();
            json!(q0 * (q - 1))
        },
        compute: |c| Ok(json!(SemigroupDescriptor::new(&suzuki_point_semigroup(c.s()))?.genus())),
    },
    ClaimDef {
        id: "suzuki.semigroup.symmetric",
        anchor: "Suzuki curve: the Weierstrass semigroup at a rational point is symmetric",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: |c| format!("H = {:?}", suzuki_point_semigroup(c.s())),
        expected: |c| json!({ "symmetric": true, "frobenius": 2 * c.genus() as i64 - 1 }),
        compute: |c| {
            let h = SemigroupDescriptor::new(&suzuki_point_semigroup(c.s()))?;
            Ok(json!({ "symmetric": h.is_symmetric(), "frobenius": h.frobenius_number() }))
        },
    },
    ClaimDef {
        id: "suzuki.ledger",
        anchor: "Suzuki curve: explicit residue system L for <q, q+2q0-1, q+2q0, q+2q0+1>",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: |c| format!("s = {}", c.s()),
        expected: |c| {
            let (q0, q) = c.q0_q();
            json!({ "residue_system": true, "least_in_class": true, "genus": q0 * (q - 1) - q0 * q0 / 4 })
        },
        compute: |c| {
            let l = suzuki_gap_ledger(c.s())?;
            Ok(json!({ "residue_system": l.complete_residue_system, "least_in_class": l.minimal_in_class, "genus": l.genus_from_gaps }))
        },
    },
    ClaimDef {
        id: "suzuki.ledger.symmetric",
        anchor: "Suzuki curve: the residue-system semigroup is not a point semigroup",
        provenance: Derived,
        applies: |c| c.is_suzuki(),
        inputs: |c| format!("s = {}", c.s()),
        expected: |_| json!(false),
        compute: |c| {
            let l = suzuki_gap_ledger(c.s())?;
            Ok(json!(SemigroupDescriptor::new(&l.generators)?.is_symmetric()))
        },
    },
    ClaimDef {
        id: "suzuki.canonical_orders.size",
        anchor: "Suzuki curve: {a + q0 b + 2q0 c + q d : a+b+c+d <= 2q0-2} has at most g elements",
        provenance: Derived,
        applies: |c| c.is_suzuki(),
        inputs: |c| {
            let (q0, q) = c.q0_q();
            format!("weights (1, {q0}, {}, {q}), budget {}", 2 * q0, 2 * q0 - 2)
        },
        expected: |_| json!(true),
        compute: |c| {
            let (q0, q) = c.q0_q();
            Ok(json!(weighted_order_set(&[1, q0, 2 * q0, q], (2 * q0 - 2) as u32).len() as u64 <= c.genus()))
        },
    },
    ClaimDef {
        id: "suzuki.aux.poles",
        anchor: "Suzuki-Tits ovoid section: z and w have pole orders q+2q0 and q+2q0+1",
        provenance: Derived,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| {
            let (q0, q) = c.q0_q();
            json!([q + 2 * q0, q + 2 * q0 + 1])
        },
        compute: |c| {
            let a = suzuki_auxiliaries(&c.curve)?;
            Ok(json!([a.z_pole, a.w_pole]))
        },
    },
    ClaimDef {
        id: "suzuki.hasse.dy",
        anchor: "Suzuki curve: D^(1) y = x^q0",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |_| json!(true),
        compute: |c| Ok(json!(suzuki_checks(c)?.0)),
    },
    ClaimDef {
        id: "suzuki.frobenius_rows",
        anchor: "Suzuki curve: y_i^q - y_i = D^(1) y_i (x^q - x) for y, z, w",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |_| json!(true),
        compute: |c| Ok(json!(suzuki_checks(c)?.1)),
    },
    ClaimDef {
        id: "suzuki.z_substitution",
        anchor: "Suzuki curve, r = 4: z = y^q0 - x^(q0+1) satisfies z^q - z = x^q0 (x^q - x)",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: |c| format!("y^q - y = x^(2q0)(x^q - x) over F_{}", c.q()),
        expected: |_| json!(true),
        compute: |c| Ok(json!(z_substitution(c)?)),
    },
    ClaimDef {
        id: "suzuki.orders.eps",
        anchor: "Suzuki curve: D-orders 0, 1, q0, 2q0, q",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| {
            let (q0, q) = c.q0_q();
            json!([0, 1, q0, 2 * q0, q])
        },
        compute: |c| Ok(json!(c.report()?.eps)),
    },
    ClaimDef {
        id: "suzuki.orders.nu",
        anchor: "Suzuki curve: Frobenius orders 0, q0, 2q0, q",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| {
            let (q0, q) = c.q0_q();
            json!({ "nu": [0, q0, 2 * q0, q], "index": 1, "nu1_exceeds_eps1": true })
        },
        compute: |c| {
            let r = c.report()?;
            Ok(json!({ "nu": r.nu, "index": r.index_i, "nu1_exceeds_eps1": r.nu.get(1) > r.eps.get(1) }))
        },
    },
    ClaimDef {
        id: "suzuki.jorders",
        anchor: "Suzuki curve: j(P) = (0, 1, q0+1, 2q0+1, q+2q0+1) at rational points",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| {
            let (q0, q) = c.q0_q();
            json!({ "j_values": [[0, 1, q0 + 1, 2 * q0 + 1, q + 2 * q0 + 1]], "points": q * q + 1 })
        },
        compute: j_summary,
    },
    ClaimDef {
        id: "suzuki.lemma_m1",
        anchor: "Suzuki curve: m1(P) = q at every rational point",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| json!([c.q()]),
        compute: |c| Ok(json!(c.report()?.points.iter().map(|p| p.m1).collect::<BTreeSet<_>>())),
    },
    ClaimDef {
        id: "suzuki.divisor.deg_r",
        anchor: "Suzuki curve: deg R = (2q0 + 3) #X(F_q), v_P(R) = 2q0 + 3",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| {
            let (q0, q) = c.q0_q();
            let v = 2 * q0 + 3;
            json!({ "deg_r": v * (q * q + 1), "per_point": [v], "sum": v * (q * q + 1) })
        },
        compute: |c| {
            let r = c.report()?;
            let per: BTreeSet<i64> = r.points.iter().map(|p| p.v_r_lower).collect();
            Ok(json!({ "deg_r": r.deg_r, "per_point": per, "sum": r.checks.v_r_total }))
        },
    },
    ClaimDef {
        id: "suzuki.divisor.deg_s",
        anchor: "Suzuki curve: deg S = (4 + 2q0) #X(F_q), v_P(S) = 4 + 2q0",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| {
            let (q0, q) = c.q0_q();
            let v = 2 * q0 + 4;
            json!({ "deg_s": v * (q * q + 1), "per_point": [v], "sum": v * (q * q + 1) })
        },
        compute: |c| {
            let r = c.report()?;
            let per: BTreeSet<i64> = r.points.iter().map(|p| p.v_s_lower).collect();
            Ok(json!({ "deg_s": r.deg_s, "per_point": per, "sum": r.checks.v_s_total }))
        },
    },
    ClaimDef {
        id: "suzuki.census",
        anchor: "Suzuki curve: the D-Weierstrass points are exactly X(F_q)",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: |c| format!("{}, affine points over F_q expanded", c.curve.id()),
        expected: |c| json!({ "fully_accounted": true, "support": c.q() * c.q() + 1 }),
        compute: |c| {
            let census = c.report()?.census.as_ref().ok_or_else(|| VeritasError::Computation("no census".into()))?;
            Ok(json!({ "fully_accounted": census.fully_accounted, "support": census.support.len() }))
        },
    },
    ClaimDef {
        id: "suzuki.top_orders",
        anchor: "Orders and the h-polynomial: eps_r = nu_(r-1) = alpha_U",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| json!([c.q(), c.q(), c.q()]),
        compute: |c| {
            let r = c.report()?;
            let h = HPolynomial::for_curve(&c.curve)?;
            Ok(json!([r.eps.last(), r.nu.last(), h.alphas().last()]))
        },
    },
    ClaimDef {
        id: "suzuki.hpoly.m",
        anchor: "Suzuki curve: D = |(q + 2q0 + 1)P0|, m = prod h_i(1)",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| {
            let (q0, q) = c.q0_q();
            json!(q + 2 * q0 + 1)
        },
        compute: |c| Ok(json!(HPolynomial::for_curve(&c.curve)?.m())),
    },
    ClaimDef {
        id: "suzuki.hpoly.z",
        anchor: "Orders and the h-polynomial: condition (Z)",
        provenance: Derived,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |_| json!({ "z": true, "roots_on_circle": true }),
        compute: |c| {
            let h = HPolynomial::for_curve(&c.curve)?;
            Ok(json!({ "z": h.satisfies_z(), "roots_on_circle": h.roots_on_circle() }))
        },
    },
    ClaimDef {
        id: "suzuki.lewittes",
        anchor: "Lewittes bound #X(F_q) <= 1 + q m1(P), tight with m1 = q",
        provenance: Derived,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |c| json!(c.q() * c.q() + 1),
        compute: |c| Ok(json!(lewittes_bound(c.q(), c.q()))),
    },
    ClaimDef {
        id: "suzuki.castelnuovo.r_large",
        anchor: "Suzuki curve, bound on r: Castelnuovo excludes r = 2q0 + 2",
        provenance: Reference,
        applies: |c| c.is_suzuki(),
        inputs: |c| {
            let (q0, q) = c.q0_q();
            format!("d = {}, r = {}", q + 2 * q0 + 1, 2 * q0 + 2)
        },
        expected: |_| json!(true),
        compute: |c| {
            let (q0, q) = c.q0_q();
            let lim = castelnuovo_limit(q + 2 * q0 + 1, 2 * q0 + 2)?;
            Ok(json!(lim < num_rational::Rational64::from_integer(2 * c.genus() as i64)))
        },
    },
    ClaimDef {
        id: "suzuki.castelnuovo.r4",
        anchor: "Suzuki curve: r = 4 is consistent with Castelnuovo",
        provenance: Derived,
        applies: |c| c.is_suzuki(),
        inputs: |c| {
            let (q0, q) = c.q0_q();
            format!("d = {}, r = 4", q + 2 * q0 + 1)
        },
        expected: |_| json!(true),
        compute: |c| {
            let (q0, q) = c.q0_q();
            let lim = castelnuovo_limit(q + 2 * q0 + 1, 4)?;
            Ok(json!(lim >= num_rational::Rational64::from_integer(2 * c.genus() as i64)))
        },
    },
    ClaimDef {
        id: "suzuki.hasse_weil",
        anchor: "Introduction: Hasse-Weil bound; the Suzuki curve is optimal, not maximal",
        provenance: Derived,
        applies: |c| c.is_suzuki(),
        inputs: curve_id,
        expected: |_| json!({ "within_bound": true, "maximal": false }),
        compute: |c| {
            let n = c.count(1)?;
            Ok(json!({ "within_bound": hasse_weil(c.q(), c.genus()).admits(n), "maximal": is_maximal(n, c.q(), c.genus()) }))
        },
    },
    // Suzuki-Tits ovoid in P^4(F_q).
    ClaimDef {
        id: "ovoid.size",
        anchor: "Suzuki-Tits ovoid: q^2 + 1 points",
        provenance: Derived,
        applies: |c| c.is_ovoid(),
        inputs: |c| format!("s = {}", c.s()),
        expected: |c| {
            let (_, q) = c.q0_q();
            json!({ "ovoid": q * q + 1, "image": q * q + 1 })
        },
        compute: |c| {
            let o = c.ovoid()?;
            Ok(json!({ "ovoid": o.size, "image": o.embedded_size }))
        },
    },
    ClaimDef {
        id: "ovoid.equal",
        anchor: "Suzuki-Tits ovoid: O = pi(X(F_q))",
        provenance: Reference,
        applies: |c| c.is_ovoid(),
        inputs: |c| format!("s = {}", c.s()),
        expected: |_| json!(true),
        compute: |c| Ok(json!(c.ovoid()?.equal)),
    },
    ClaimDef {
        id: "ovoid.injective",
        anchor: "Suzuki-Tits ovoid: pi is injective on X(F_q)",
        provenance: Reference,
        applies: |c| c.is_ovoid(),
        inputs: |c| format!("s = {}", c.s()),
        expected: |_| json!(true),
        compute: |c| Ok(json!(c.ovoid()?.injective)),
    },
    ClaimDef {
        id: "ovoid.w_identity",
        anchor: "Suzuki-Tits ovoid: w(a, b) = a f(a, b) + b^2",
        provenance: Reference,
        applies: |c| c.is_ovoid(),
        inputs: |c| format!("s = {}", c.s()),
        expected: |_| json!(true),
        compute: |c| Ok(json!(c.ovoid()?.w_identity)),
    },
    ClaimDef {
        id: "ovoid.exploratory.no_three_collinear",
        anchor: "Suzuki-Tits ovoid: no three points collinear (exploratory)",
        provenance: Derived,
        applies: |c| c.is_ovoid() && c.s() == 1,
        inputs: |_| "all 43680 triples".into(),
        expected: |_| json!(true),
        compute: |c| Ok(json!(c.ovoid()?.no_three_collinear)),
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_anchored() {
        let ids: BTreeSet<&str> = CLAIMS.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CLAIMS.len());
        assert!(CLAIMS.iter().all(|c| !c.anchor.is_empty()));
    }
}
