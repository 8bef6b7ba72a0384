use orthoinv::algebra::make_field;

fn main() {
    let f = make_field(8).unwrap();
    let a = 0x53;
    let inv = f.inv(a).unwrap();
    println!("GF(2^8): {a:#04x} * {inv:#04x} = {}", f.mul(a, inv));
    let s = f.sqrt(a);
    println!("sqrt({a:#04x}) = {s:#04x}, squared back {:#04x}", f.square(s));
    println!("trace-one element: {}", f.trace_one_element());

    let small = make_field(4).unwrap();
    let ext = small.quadratic_extension().unwrap();
    let emb = small.embedding_into(&ext).unwrap();
    println!("GF(16) -> GF(256): 2 maps to {}", emb.apply(2));
}
