use fano4::basket::EngineConfig;
use fano4::formats::FormatFamily;
use fano4::qs::{certify_quasismooth, verify_quasismooth};
use std::time::Instant;

fn main() {
    let cases = [
        "CI c=2 d=[36,40] w=[5,5,7,8,9,12,31]",
        "CI c=3 d=[16,18,20] w=[4,5,5,6,7,8,9,11]",
        "GR c=[-1/2,7/2,11/2,17/2,37/2] w=[2,3,5,7,8,9,11,27]",
        "P2P2 a=[0,2,7] b=[3,4,5] w=[2,3,3,3,4,5,5,7,11]",
        "GR c=[1/2,1/2,1/2,21/2,21/2] w=[1,1,1,3,7,11,11,11]",
        "P2P2 a=[0,0,10] b=[1,1,11] w=[1,1,1,1,3,7,11,11,11]",
    ];
    let config = EngineConfig::default();
    for s in cases {
        let family: FormatFamily = s.parse().unwrap();
        let t0 = Instant::now();
        let cert = verify_quasismooth(&family, &config);
        println!(
            "{}\n  -> {:?} via {:?} in {:.2?} (spairs {}) notes: {:?}",
            s, cert.status, cert.method, t0.elapsed(), cert.spairs_used, cert.notes
        );
        let t1 = Instant::now();
        let fast = certify_quasismooth(&family, &config);
        println!("  certify path: {:?} via {:?} in {:.2?}", fast.status, fast.method, t1.elapsed());
    }
}
