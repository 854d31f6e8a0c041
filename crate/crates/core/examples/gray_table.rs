//! The Gray map on Z_4 (the classical one) and on GR(4, 2).

use gray_auth::gray::GrayMap;
use gray_auth::ring::GaloisRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, r, d) in [(2, 2, 1), (2, 2, 2), (3, 2, 1)] {
        let ring = GaloisRing::new(p, r, d)?;
        let gray = GrayMap::new(&ring);
        println!("{}  ({} coordinates)", ring.params(), gray.len());
        for (idx, elem, image) in gray.table() {
            println!("  {idx:>2}  {elem:<4} -> {image}");
        }
    }

    // adding c p^{r-1} shifts every coordinate by rho(c)
    let ring = GaloisRing::new(2, 2, 2)?;
    let gray = GrayMap::new(&ring);
    let a = ring.parse_element("1,3")?;
    let c = ring.xi_power(2);
    println!("Phi({a}) = {}", gray.gray(&a));
    println!("Phi({a} + 2*{c}) = {}", gray.gray_add_socle(&a, &c)?);
    Ok(())
}
