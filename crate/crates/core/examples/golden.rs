use num_rational::BigRational;
use torus_bif::{bif_index, example_problem};

fn main() {
    let p = example_problem();
    let level = p.level(3, &BigRational::from_integer(2.into())).unwrap();
    println!("{}", bif_index(&p, &level).unwrap());
}
