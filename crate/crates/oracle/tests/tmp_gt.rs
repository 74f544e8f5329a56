use a2rep_core::spider::{clasp_twist_coeff, sixj_square, twist_coeff, Sign};
use a2rep_core::RatFunc;
use a2rep_oracle::basis::oracle_generator_matrix;
use a2rep_oracle::Budget;

#[test]
fn even_generator_formula_vs_oracle_k2() {
    let (n, k) = (1i64, 2usize);
    let d = (n as usize + 1).pow(k as u32 - 1);
    // Formula: block on slot 0 (t = 1): M[b][j] = sum_a twist(n,j,+) clasp(a,-)
    //          sixj_square(n,j,a) sixj_square(n,a,b).
    let mut formula = vec![vec![RatFunc::zero(); d]; d];
    for j in 0..=n {
        for b in 0..=n {
            let mut acc = RatFunc::zero();
            for a in 0..=n {
                let term = &(&sixj_square(n, j, a) * &sixj_square(n, a, b))
                    * &(&twist_coeff(n, j, Sign::Pos) * &clasp_twist_coeff(a, Sign::Neg));
                acc = &acc + &term;
            }
            formula[b as usize][j as usize] = acc;
        }
    }
    let mut budget = Budget::with_limit(50_000_000);
    let oracle = oracle_generator_matrix(1, 2, 1, 3, true, &mut budget).unwrap();
    println!("budget used ok");
    for r in 0..d {
        for c in 0..d {
            println!("[{r}][{c}] formula = {}", formula[r][c]);
            println!("[{r}][{c}] oracle  = {}", oracle[r][c]);
        }
    }
    let same = (0..d).all(|r| (0..d).all(|c| formula[r][c] == oracle[r][c]));
    println!("MATCH: {same}");
}
