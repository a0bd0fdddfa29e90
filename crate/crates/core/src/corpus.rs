//! Named arrangements with known invariants.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::format;

use crate::arrangement::Arrangement;

/// `xyz(x+y)(x+3y)(x+2y+z)(4x+8y+z)`: one quadruple point, one triple point.
pub const C1: [[i64; 3]; 7] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [1, 3, 0],
    [1, 2, 1],
    [4, 8, 1],
];

/// `xyz(x+2y+z)(y+z)(x-2y)(x-y)`: same multiplicities as [`C1`], but one line
/// passes through both points of multiplicity greater than two.
pub const C2: [[i64; 3]; 7] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 2, 1],
    [0, 1, 1],
    [1, -2, 0],
    [1, -1, 0],
];

/// `xyz(2x-3y+z)(x-y)(x+z)(y+z)`: four triple points.
pub const C3: [[i64; 3]; 7] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [2, -3, 1],
    [1, -1, 0],
    [1, 0, 1],
    [0, 1, 1],
];

pub fn c1() -> Arrangement {
    Arrangement::from_ints(&C1).expect("valid")
}

pub fn c2() -> Arrangement {
    Arrangement::from_ints(&C2).expect("valid")
}

pub fn c3() -> Arrangement {
    Arrangement::from_ints(&C3).expect("valid")
}

pub fn triangle() -> Arrangement {
    Arrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).expect("valid")
}

/// `d` lines `x + t y` (t = 0..d-2) and `y`, all through `(0:0:1)`.
pub fn pencil(d: usize) -> Arrangement {
    assert!(d >= 1);
    let mut rows: Vec<[i64; 3]> = (0..d as i64 - 1).map(|t| [1, t, 0]).collect();
    rows.push([0, 1, 0]);
    Arrangement::from_ints(&rows).expect("valid")
}

/// A pencil of `d - 1` lines through `(0:0:1)` plus the line `z`.
pub fn near_pencil(d: usize) -> Arrangement {
    assert!(d >= 3);
    let mut rows: Vec<[i64; 3]> = pencil(d - 1)
        .lines()
        .iter()
        .map(|l| {
            let c = l.coeffs();
            [
                i64::try_from(&c[0]).expect("small"),
                i64::try_from(&c[1]).expect("small"),
                i64::try_from(&c[2]).expect("small"),
            ]
        })
        .collect();
    rows.push([0, 0, 1]);
    Arrangement::from_ints(&rows).expect("valid")
}

/// Two pencils: `y + t z` (t < m1) through `(1:0:0)` and `x + s z` (s < m2)
/// through `(0:1:0)`. The line `z` joining the centers is not included, and
/// `(y + t z) ∩ (x + s z) = (-s : -t : 1)` are pairwise distinct double points.
pub fn two_pencils(m1: usize, m2: usize) -> Arrangement {
    let mut rows: Vec<[i64; 3]> = (0..m1 as i64).map(|t| [0, 1, t]).collect();
    rows.extend((0..m2 as i64).map(|s| [1, 0, s]));
    Arrangement::from_ints(&rows).expect("valid")
}

/// Named entries for reports and regression runs.
pub fn named() -> Vec<(String, Arrangement)> {
    let mut out = alloc::vec![
        (String::from("C1"), c1()),
        (String::from("C2"), c2()),
        (String::from("C3"), c3()),
    ];
    for (m1, m2) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        out.push((format!("two_pencils({m1},{m2})"), two_pencils(m1, m2)));
    }
    out.push((String::from("triangle"), triangle()));
    for d in [3, 4, 5] {
        out.push((format!("pencil({d})"), pencil(d)));
    }
    for d in [4, 5, 6] {
        out.push((format!("near_pencil({d})"), near_pencil(d)));
    }
    out
}
