//! Arithmetic in GR(4, 2) and its degree-2 extension GR(4, 4).

use gray_auth::ring::{Extension, GaloisRing};

fn main() -> Result<(), gray_auth::ring::RingError> {
    let a = GaloisRing::new(2, 2, 2)?;
    println!("A = {}", a.params());
    let x = a.x();
    println!("x * x = {}", &x * &x);
    println!("x^3   = {}", x.pow(3));

    let teich = a.teichmuller();
    let t: Vec<String> = teich.elements().map(|e| e.to_string()).collect();
    println!("T(A) = {{{}}}", t.join(", "));

    // every element is a0 + 2 a1 with Teichmuller digits
    let e = a.parse_element("3,1")?;
    let digits = a.padic_digits(&e);
    println!("3,1 has digits {} + 2*{}", digits[0], digits[1]);
    assert_eq!(a.from_digits(&digits)?, e);
    println!("residue of 3,1 in F_4: {}", a.rho(&e));

    let b = GaloisRing::new(2, 2, 4)?;
    let ext = Extension::new(&a, &b)?;
    let image = ext.embed(&x)?;
    println!("B = {}, x_A -> {}", b.params(), image);
    for y in [b.one(), b.x(), b.xi_power(5)] {
        println!("Tr({y}) = {}", ext.trace(&y)?);
    }
    Ok(())
}
