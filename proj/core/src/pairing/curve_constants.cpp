#include "ppcc/pairing/curve_constants.hpp"

namespace ppcc::pairing {

namespace {
constexpr CurveConstants kCurves[] = {
    {160, "ppcc-type-a-160",
     "a04cd5b6bb25fea9b4225891ff07424a3668e9730f4ef32b508a2c7fd30e6cd24ba24c92d27f074595a5b9f51566608ae516463349583b0d6138db30da7be23b",
     "b7c8ea0967a2333d9bc6b4da2749615dcf3c024d",
     "df499307914bfcf0adde020d20787c587f9fb8479f8b915396646bae999dcda7db612b973256958cbc85f12c"},
    {224, "ppcc-type-a-224",
     "81b159b0d866dd8489e690ccdffb6fc92099ba9d3009782a716c3e0b9b91e03a0dab49a439f0c9a801f35258e6fdb37839caf908b6a2dacea145faa75d2e3ab3",
     "886804bdd9845b601f9070d403fe2aa014ba537f4bb52b7141d47755",
     "f3667f23edcf41176e50a138ad7742f6dbaba18fb9d038d3f286f8e5d43e1c133aae27e4"},
    {256, "ppcc-type-a-256",
     "984e7bfc90c1203b4dc309ace65772eafe8bb00d6e5c7da542318ac437e042121f051beca262f8ba6f304527921c85ac9bcaacf741f7b8c0fb8127af11f5af23",
     "a73a9ed6242ae679622383dda639709fa5ae13104fedf1f82123e22a6690765d",
     "e9280066543a07b702ada1782e46cffe691d8ac15238126ad3049e586f357174"},
};
}  // namespace

const CurveConstants* find_curve_constants(unsigned order_bits) {
  for (const auto& c : kCurves) {
    if (c.order_bits == order_bits) return &c;
  }
  return nullptr;
}

}  // namespace ppcc::pairing
