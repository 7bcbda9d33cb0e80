//! Benchmark fixtures shared by the criterion targets in `benches/`.

use hallshuffle::shuffle::{gen_H, gen_Sbar};
use hallshuffle::symfunc::parse_expr;
use hallshuffle::{Presentation, ShuffleElement, SlopeParams, SymFuncExpr};

pub fn sbar(m: i64, n: usize, d: usize) -> ShuffleElement {
    gen_Sbar(SlopeParams { m, n, d }, Presentation::A).expect("valid slope")
}

pub fn h(m: i64, n: usize) -> ShuffleElement {
    gen_H(m, n).expect("valid parameters")
}

pub fn expr(src: &str) -> SymFuncExpr {
    parse_expr(src).expect("parses")
}
