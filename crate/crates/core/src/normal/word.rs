use crate::matrix::{Gate, Mat2};

/// Exact product of a gate sequence; the first gate is the leftmost factor.
pub fn eval_word(gates: &[Gate]) -> Mat2 {
    gates
        .iter()
        .fold(Mat2::identity(), |acc, g| &acc * g.unitary())
}

pub fn t_count_word(gates: &[Gate]) -> usize {
    gates.iter().filter(|&&g| g == Gate::T).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(w: &str) -> Mat2 {
        eval_word(&Gate::parse_word(w).unwrap())
    }

    #[test]
    fn word_evaluation() {
        assert!(eval("").is_identity());
        assert_eq!(&eval("TT"), Gate::S.unitary());
        assert_eq!(&eval("TST"), Gate::Z.unitary());
    }
}
