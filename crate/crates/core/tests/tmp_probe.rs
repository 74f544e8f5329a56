use a2rep_core::spider::{sixj_mixed, sixj_square};
use a2rep_core::RatFunc;

#[test]
fn probe_mixed_involution() {
    for n in 1..=2i64 {
        for s in 0..=n {
            for t in 0..=n {
                let m = sixj_mixed(n, s, t).unwrap();
                let sq = &m * &m;
                println!("n={n} s={s} t={t}: mixed={m}  mixed^2={} one={}", sq, sq.is_one());
            }
        }
    }
    let f = sixj_square(1, 1, 1);
    println!("sq(1,1,1)={f}");
}
