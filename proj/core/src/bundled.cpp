#include "quiva/bundled.hpp"

namespace quiva::bundled {

const std::map<std::string, std::string>& presentations() {
    static const std::map<std::string, std::string> all = {
        {"e3_1",
         "# two commuting paths x -> w with a nilpotent loop on the sink\n"
         "field Q\n"
         "vertex x y z w\n"
         "arrow a: x -> y\n"
         "arrow b: x -> z\n"
         "arrow g: y -> w\n"
         "arrow e: z -> w\n"
         "arrow d: w -> w\n"
         "rel d*d\n"
         "rel d*g\n"
         "rel d*e\n"
         "rel g*a - e*b\n"},
        {"e3_2",
         "# nilpotent loop feeding an arrow\n"
         "field Q\n"
         "vertex x y\n"
         "arrow d: x -> x\n"
         "arrow a: x -> y\n"
         "rel a*d\n"
         "rel d*d\n"
         "order x < y\n"},
        {"e4_1",
         "# two sources into a self-injective sink corner\n"
         "field Q\n"
         "vertex x y z\n"
         "arrow a: x -> z\n"
         "arrow b: y -> z\n"
         "arrow d: z -> z\n"
         "arrow r: y -> y\n"
         "rel b*r - d*b\n"
         "rel d*d\n"
         "rel r*r\n"
         "rel d*a\n"},
        {"e4_2",
         "# loops on both vertices, arrow intertwines them\n"
         "field Q\n"
         "vertex x y\n"
         "arrow r: x -> x\n"
         "arrow a: x -> y\n"
         "arrow d: y -> y\n"
         "rel d*a - a*r\n"
         "rel d*d\n"
         "rel r*r\n"},
        {"ringel_dual_cycle",
         "# two-cycle with relation be*al*be = 0; not a directed category\n"
         "field Q\n"
         "vertex v1 v2\n"
         "arrow al: v1 -> v2\n"
         "arrow be: v2 -> v1\n"
         "rel be*al*be\n"},
        {"apr_negative",
         "# site hypotheses fail: d kills the only incoming arrow\n"
         "field Q\n"
         "vertex x z\n"
         "arrow a: x -> z\n"
         "arrow d: z -> z\n"
         "rel d*d\n"
         "rel d*a\n"},
    };
    return all;
}

const std::string& text(const std::string& name) {
    const auto& all = presentations();
    auto it = all.find(name);
    if (it == all.end()) throw Error("no bundled presentation named '" + name + "'");
    return it->second;
}

Presentation load(const std::string& name) { return parse_presentation(text(name)); }

}  // namespace quiva::bundled
