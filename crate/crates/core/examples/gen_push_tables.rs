//! Regenerates `src/normal/push_tables.rs`:
//!
//! ```text
//! cargo run -p cliffordt --example gen_push_tables > crates/core/src/normal/push_tables.rs
//! ```

use cliffordt::normal::{
    derive_t_push_table, render_table, BocharovSvore, ETFamily, MatsumotoAmano,
};

fn main() {
    println!("//! Generated by `cargo run -p cliffordt --example gen_push_tables`; do not edit.");
    println!("//!");
    println!("//! Entries are `action << 8 | tail`, see `TPush::encode`.");
    println!();
    print!("{}", render_table("MA_T_PUSH", &derive_t_push_table::<MatsumotoAmano>()));
    println!();
    print!("{}", render_table("ET_T_PUSH", &derive_t_push_table::<ETFamily>()));
    println!();
    print!("{}", render_table("BS_T_PUSH", &derive_t_push_table::<BocharovSvore>()));
}
