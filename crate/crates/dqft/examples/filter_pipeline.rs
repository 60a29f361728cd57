use dqft::{dqft_right, idqft_right, filter_signal, DQSignal, DualQuaternion,
           FrequencyMask, Quaternion, Side, TransformAxis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let axis = TransformAxis::default();
    let pose = DualQuaternion::from_rot_trans(Quaternion::IDENTITY, [1.0, 0.0, 0.0])?;
    let signal = DQSignal::new(vec![pose; 8])?;

    let spectrum = dqft_right(&signal, &axis);
    let _back = idqft_right(&spectrum)?;

    let (smoothed, report) =
        filter_signal(&signal, &FrequencyMask::low_pass(8, 1), Side::Right, &axis, true)?;
    println!("kept {} bins, attenuated {:.1}% of the energy, {} samples out",
             report.kept_bins,
             100.0 * report.attenuated_energy_fraction,
             smoothed.len());
    Ok(())
}
