use a2rep_core::spider::sixj_square;
use a2rep_core::RatFunc;
use a2rep_oracle::basis::basis_family;
use a2rep_oracle::diagram::WebDiagram;
use a2rep_oracle::pair::coordinates;
use a2rep_oracle::skein::SkeinElement;
use a2rep_oracle::Budget;

type Mat = Vec<Vec<RatFunc>>;

fn rotate_boundary(d: &WebDiagram, by: isize) -> WebDiagram {
    let mut out = d.clone();
    let mut b = out.release_boundary();
    let len = b.len() as isize;
    let s = ((by % len) + len) % len;
    b.rotate_left(s as usize);
    out.push_boundary(&b);
    out.validate().expect("rotated boundary web still valid");
    out
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    (0..d).map(|r| (0..d).map(|c| {
        let mut acc = RatFunc::zero();
        for m in 0..d { acc = &acc + &(&a[r][m] * &b[m][c]); }
        acc
    }).collect()).collect()
}
fn is_identity(a: &Mat) -> bool {
    a.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, e)| if r == c { e.is_one() } else { e.is_zero() }))
}

#[test]
fn oracle_two_step_rotation_k3() {
    let (n, k) = (1usize, 3usize);
    let d = (n + 1).pow(k as u32 - 1);
    let fam0 = basis_family(n, k).unwrap();
    for by in [2isize, -2isize] {
        let famr: Vec<WebDiagram> = fam0.iter().map(|w| rotate_boundary(w, by * n as isize)).collect();
        let mut budget = Budget::with_limit(200_000_000);
        let mut s2: Mat = vec![vec![RatFunc::zero(); d]; d];
        for (col, w) in fam0.iter().enumerate() {
            let target = SkeinElement::from_term(RatFunc::one(), w.clone());
            let coords = coordinates(&famr, &target, &mut budget).unwrap();
            for (row, v) in coords.into_iter().enumerate() {
                s2[row][col] = v;
            }
        }
        let s4 = mul(&s2, &s2);
        let s6 = mul(&s4, &s2);
        println!("by={by}: S2^3 == I: {}", is_identity(&s6));
        for r in 0..d {
            for c in 0..d {
                if !s2[r][c].is_zero() {
                    println!("  by={by} S2[{r}][{c}] = {}", s2[r][c]);
                }
            }
        }
    }
    // Trusted even blocks for reference.
    for i in 0..=1i64 {
        for j in 0..=1i64 {
            println!("sixj_square(1,{i},{j}) = {}", sixj_square(1, i, j));
        }
    }
}

#[test]
fn rotation_span_residual_k3() {
    let (n, k) = (1usize, 3usize);
    let d = (n + 1).pow(k as u32 - 1);
    let fam0 = basis_family(n, k).unwrap();
    let famr: Vec<WebDiagram> = fam0.iter().map(|w| rotate_boundary(w, 2)).collect();
    let mut budget = Budget::with_limit(500_000_000);

    // Expansion of fam0[J] in famr, then residual against fam0 functionals.
    use a2rep_oracle::pair::pair_diagrams;
    for j in 0..d {
        let target = SkeinElement::from_term(RatFunc::one(), fam0[j].clone());
        let coords = coordinates(&famr, &target, &mut budget).unwrap();
        let mut max_bad = 0usize;
        for i in 0..d {
            let lhs = pair_diagrams(&fam0[i], &fam0[j], &mut budget).unwrap();
            let mut rhs = RatFunc::zero();
            for r in 0..d {
                let p = pair_diagrams(&fam0[i], &famr[r], &mut budget).unwrap();
                rhs = &rhs + &(&coords[r] * &p);
            }
            if lhs != rhs { max_bad += 1; }
        }
        println!("column {j}: {max_bad} of {d} residual functionals disagree");
    }
}

#[test]
fn gram_structure_k3() {
    let (n, k) = (1usize, 3usize);
    let fam0 = basis_family(n, k).unwrap();
    let mut budget = Budget::with_limit(500_000_000);
    let g = a2rep_oracle::pair::gram_matrix(&fam0, &mut budget).unwrap();
    for (r, row) in g.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if !e.is_zero() {
                println!("G[{r}][{c}] = {e}");
            }
        }
    }
}
