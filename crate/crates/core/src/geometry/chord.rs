use core::f64::consts::PI;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Error)]
pub enum ChordError {
    #[error("chord endpoint at distance {0} from the center of D, not on its boundary")]
    EndpointOffCircle(f64),
    #[error("chord endpoints coincide")]
    DegenerateChord,
}

const CONTAINMENT_SLACK: f64 = 1e-9;

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    libm::hypot(a[0] - b[0], a[1] - b[1])
}

/// Sampling test that a chord `pq` of the unit disk `D` lies in the disk `E`
/// exactly when the cap cut off by `pq` (away from the center of `D`) does.
///
/// `E` has radius `radius_e`; the equivalence is only guaranteed for unit
/// radius. The cap is sampled on a `samples x samples` grid in arc/depth
/// coordinates and the chord at `samples` evenly spaced points.
pub fn chord_cap_check(
    center_d: [f64; 2],
    chord: ([f64; 2], [f64; 2]),
    center_e: [f64; 2],
    radius_e: f64,
    samples: usize,
) -> Result<bool, ChordError> {
    let (p, q) = chord;
    for x in [p, q] {
        let r = dist(x, center_d);
        if libm::fabs(r - 1.0) > 1e-9 {
            return Err(ChordError::EndpointOffCircle(r));
        }
    }
    if dist(p, q) < 1e-12 {
        return Err(ChordError::DegenerateChord);
    }
    let samples = samples.max(2);
    let inside = |x: [f64; 2]| dist(x, center_e) <= radius_e + CONTAINMENT_SLACK;
    let lerp = |a: [f64; 2], b: [f64; 2], t: f64| [a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t];
    let step = |i: usize| i as f64 / (samples - 1) as f64;

    let chord_in = (0..samples).all(|i| inside(lerp(p, q, step(i))));

    let angle = |x: [f64; 2]| libm::atan2(x[1] - center_d[1], x[0] - center_d[0]);
    let (ap, aq) = (angle(p), angle(q));
    let mut sweep = aq - ap;
    while sweep <= 0.0 {
        sweep += 2.0 * PI;
    }
    // the cap lies on the shorter arc; for a diameter either side qualifies
    let (start, sweep, from, to) = if sweep <= PI { (ap, sweep, p, q) } else { (aq, 2.0 * PI - sweep, q, p) };
    let (dx, dy) = (to[0] - from[0], to[1] - from[1]);
    let len2 = dx * dx + dy * dy;
    let mut cap_in = true;
    'outer: for i in 0..samples {
        let t = start + sweep * step(i);
        let arc = [center_d[0] + libm::cos(t), center_d[1] + libm::sin(t)];
        let s = ((arc[0] - from[0]) * dx + (arc[1] - from[1]) * dy) / len2;
        let foot = lerp(from, to, s.clamp(0.0, 1.0));
        for j in 0..samples {
            if !inside(lerp(foot, arc, step(j))) {
                cap_in = false;
                break 'outer;
            }
        }
    }
    Ok(chord_in == cap_in)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_disks() {
        let c = [0.3, -0.2];
        let p = [c[0] + 1.0, c[1]];
        let q = [c[0], c[1] + 1.0];
        assert_eq!(chord_cap_check(c, (p, q), c, 1.0, 50), Ok(true));
    }

    #[test]
    fn endpoints_must_be_on_circle() {
        assert!(matches!(
            chord_cap_check([0.0, 0.0], ([0.5, 0.0], [0.0, 1.0]), [0.0, 0.0], 1.0, 10),
            Err(ChordError::EndpointOffCircle(_))
        ));
    }

    #[test]
    fn larger_disk_can_break_the_equivalence() {
        // a radius-2 disk through both chord endpoints is flatter than D, so
        // the tip of the cap pokes out of it
        let a = 0.6f64;
        let p = [libm::cos(a), libm::sin(a)];
        let q = [libm::cos(a), -libm::sin(a)];
        let x = libm::cos(a) - libm::sqrt(4.0 - libm::sin(a) * libm::sin(a)) + 1e-6;
        assert_eq!(chord_cap_check([0.0, 0.0], (p, q), [x, 0.0], 2.0, 60), Ok(false));
    }

    #[test]
    fn smaller_disk_keeps_the_equivalence() {
        let a = 1.2f64;
        let p = [libm::cos(a), libm::sin(a)];
        let q = [libm::cos(a), -libm::sin(a)];
        let r = 0.95;
        let x = libm::cos(a) - libm::sqrt(r * r - libm::sin(a) * libm::sin(a)) + 1e-6;
        assert_eq!(chord_cap_check([0.0, 0.0], (p, q), [x, 0.0], r, 80), Ok(true));
    }
}
