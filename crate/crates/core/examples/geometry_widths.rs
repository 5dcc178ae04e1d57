//! Directional widths, mean width and hull perimeter of planar domains.

use std::f64::consts::PI;

use spectral_riesz::geometry::{Domain, Polygon, UnitVector};

fn main() -> spectral_riesz::Result<()> {
    let hexagon = Polygon::regular(6, 1.0, [0.0, 0.0])?;
    println!("regular hexagon: area {:.6}, perimeter {:.6}", hexagon.area(), hexagon.perimeter());
    println!("  mean width {:.6} = hull perimeter / pi = {:.6}", hexagon.mean_width()?, hexagon.hull_perimeter()? / PI);

    // an L-shape: the hull perimeter is shorter than the perimeter
    let l_shape = Domain::polygon(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]])?;
    if let Some(p) = l_shape.as_polygon() {
        println!("L-shape: convex {}, perimeter {:.4}, hull perimeter {:.4}, inradius {:.4}", p.is_convex(), p.perimeter(), p.hull_perimeter()?, p.inradius());
    }
    for deg in [0.0, 30.0, 45.0, 90.0] {
        let v = UnitVector::from_angle(deg * PI / 180.0);
        println!("  width at {deg:>4} degrees: {:.6}", l_shape.width(&v)?);
    }

    let slab = Domain::new_box(vec![1.0, 1.0, 0.1])?;
    println!("slab [1,1,0.1]: axis widths {:?}, boundary measure {:.3}", slab.axis_widths(), slab.boundary_measure());
    Ok(())
}
