#![allow(dead_code)]

use trivlim_core::Curve;

/// First `y^2 = x^(2g+1) + a x + b` over `F_p` that is squarefree and has at
/// least `2g + 2` affine rational places.
pub fn test_curve(p: u64, g: usize) -> Curve {
    for b in 1..p as i64 {
        for a in 1..p as i64 {
            let mut f = vec![0i64; 2 * g + 2];
            f[0] = b;
            f[1] = a;
            f[2 * g + 1] = 1;
            if let Ok(c) = Curve::new(p, &f) {
                if c.affine_places().len() >= 2 * g + 2 {
                    return c;
                }
            }
        }
    }
    panic!("no suitable curve of genus {g} over F_{p}");
}

pub fn curves() -> Vec<Curve> {
    let mut out = Vec::new();
    for p in [7, 101] {
        for g in 2..=4 {
            out.push(test_curve(p, g));
        }
    }
    out
}
