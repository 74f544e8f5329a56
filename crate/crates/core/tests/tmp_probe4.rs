use a2rep_core::spider::{sixj_mixed, sixj_square};
use a2rep_core::tri::rotation_flip_word;
use a2rep_core::RatFunc;

type Mat = Vec<Vec<RatFunc>>;

fn dim(n: i64, k: usize) -> usize { (n as usize + 1).pow(k as u32 - 1) }
fn idx_to_js(n: i64, k: usize, mut idx: usize) -> Vec<i64> {
    let base = n as usize + 1;
    let mut js = vec![0i64; k - 1];
    for s in (0..k - 1).rev() { js[s] = (idx % base) as i64; idx /= base; }
    js
}
fn js_to_idx(n: i64, js: &[i64]) -> usize {
    js.iter().fold(0usize, |acc, &j| acc * (n as usize + 1) + j as usize)
}
fn mul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    (0..d).map(|r| (0..d).map(|c| {
        let mut acc = RatFunc::zero();
        for m in 0..d {
            if !a[r][m].is_zero() && !b[m][c].is_zero() { acc = &acc + &(&a[r][m] * &b[m][c]); }
        }
        acc
    }).collect()).collect()
}
fn is_identity(a: &Mat) -> bool {
    a.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, e)| if r == c { e.is_one() } else { e.is_zero() }))
}
fn ident(d: usize) -> Mat {
    (0..d).map(|r| (0..d).map(|c| if r == c { RatFunc::one() } else { RatFunc::zero() }).collect()).collect()
}

fn flip_mat(n: i64, k: usize, c: usize, transpose_even: bool, invert_odd: bool) -> Mat {
    let d = dim(n, k);
    let mut m: Mat = vec![vec![RatFunc::zero(); d]; d];
    if c % 2 == 0 {
        let slot = c / 2;
        for col in 0..d {
            let js = idx_to_js(n, k, col);
            for b in 0..=n {
                let mut t = js.clone();
                t[slot] = b;
                let row = js_to_idx(n, &t);
                m[row][col] = if transpose_even { sixj_square(n, b, js[slot]) } else { sixj_square(n, js[slot], b) };
            }
        }
    } else {
        let ip = (c - 1) / 2;
        for col in 0..d {
            let js = idx_to_js(n, k, col);
            let f = sixj_mixed(n, js[ip], js[ip + 1]).unwrap();
            m[col][col] = if invert_odd { f.recip().unwrap() } else { f };
        }
    }
    m
}

// One word application; odd chord direction chosen per chord by `dir(c) -> invert`.
fn word_mat(n: i64, k: usize, te: bool, left: bool, dir: &dyn Fn(usize) -> bool) -> Mat {
    let word = rotation_flip_word(k);
    let mut s = ident(dim(n, k));
    for &c in &word {
        let inv = if c % 2 == 1 { dir(c) } else { false };
        let f = flip_mat(n, k, c, te, inv);
        s = if left { mul(&f, &s) } else { mul(&s, &f) };
    }
    s
}

#[test]
fn probe_direction_sequences_k3() {
    let (n, k) = (1i64, 3usize);
    // odd_seq: direction (invert?) of the single odd chord for rotations 0..5.
    // 0: all K, 1: all K^-1, 2: alternate K first, 3: alternate K^-1 first.
    for te in [false, true] {
        for left in [false, true] {
            for seq in 0..4u8 {
                let mut tot = ident(dim(n, k));
                for rot in 0..2 * k {
                    let inv = match seq { 0 => false, 1 => true, 2 => rot % 2 == 1, _ => rot % 2 == 0 };
                    let w = word_mat(n, k, te, left, &|_| inv);
                    tot = if left { mul(&w, &tot) } else { mul(&tot, &w) };
                }
                if is_identity(&tot) {
                    println!("SURVIVOR k=3: te={te} left={left} seq={seq}");
                }
            }
        }
    }
    println!("k3 sweep done");
}

#[test]
fn probe_all_event_assignments_k3() {
    let (n, k) = (1i64, 3usize);
    let word = rotation_flip_word(k); // [1, 0, 2]: one odd flip per rotation
    let d = dim(n, k);
    for te in [false, true] {
        for left in [false, true] {
            // Precompute the two odd variants and the two even matrices.
            let mut found = 0u32;
            for mask in 0..64u32 {
                let mut tot = ident(d);
                for rot in 0..6 {
                    let inv = (mask >> rot) & 1 == 1;
                    for &c in &word {
                        let f = flip_mat(n, k, c, te, if c % 2 == 1 { inv } else { false });
                        tot = if left { mul(&f, &tot) } else { mul(&tot, &f) };
                    }
                }
                if is_identity(&tot) {
                    println!("EVENT SURVIVOR: te={te} left={left} mask={mask:06b}");
                    found += 1;
                }
            }
            println!("te={te} left={left}: {found} survivors");
        }
    }
}
