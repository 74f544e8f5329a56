//! Cross checks of web rewriting against the closed form coefficients.
//!
//! The rewriting engine never consults closed form web evaluations, so
//! agreement here confirms both the wiring of the coefficient webs and the
//! formulas they are named after: clasped loop values, theta coefficients
//! and tetrahedral coefficients at desk scale.

use a2rep_core::scalar::qint;
use a2rep_core::spider;
use a2rep_core::RatFunc;
use a2rep_oracle::basis::{tet_web, theta_web};
use a2rep_oracle::reduce::evaluate;
use a2rep_oracle::{Budget, VertexKind, WebDiagram};

fn value(d: WebDiagram) -> RatFunc {
    evaluate(d, &mut Budget::with_limit(2_000_000))
        .unwrap()
        .scalar()
        .expect("closed diagram must reduce to a scalar")
}

fn qq(n: i64) -> RatFunc {
    RatFunc::from_poly(qint(n))
}

#[test]
fn clasp_loops_match_the_loop_value() {
    for n in 1..=2usize {
        let mut d = WebDiagram::new();
        let mut heads = Vec::new();
        let mut tails = Vec::new();
        for _ in 0..n {
            let (t, h) = d.alloc_edge();
            tails.push(t);
            heads.push(h);
        }
        let mut rot = heads;
        rot.extend(tails.into_iter().rev());
        d.add_vertex(VertexKind::Clasp { n }, rot);
        assert_eq!(value(d), spider::delta(n as i64, 0), "clasp loop, weight {n}");
    }
}

#[test]
fn theta_webs_match_the_closed_form() {
    for n in 1..=2usize {
        for i in 0..=n {
            let d = theta_web(n, i).unwrap();
            assert_eq!(value(d), spider::theta(n as i64, i as i64), "theta({n},{i})");
        }
    }
}

#[test]
fn tet_webs_match_the_closed_form() {
    for n in 1..=2usize {
        for i in 0..=n {
            for j in 0..=n {
                let d = tet_web(n, i, j).unwrap();
                assert_eq!(
                    value(d),
                    spider::tet(n as i64, i as i64, j as i64),
                    "tet({n},{i},{j})"
                );
            }
        }
    }
}

#[test]
fn tetrahedral_coefficient_at_one_one_one() {
    let expect = &(-&(&qq(2) * &qq(4))) / &qq(3);
    assert_eq!(spider::tet(1, 1, 1), expect);
    assert_eq!(value(tet_web(1, 1, 1).unwrap()), expect);
}
