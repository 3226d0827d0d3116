#include <array>
#include <string_view>

#include "serre/modcurve.hpp"

// Expanded j-maps of X_sp^+(q), coefficients in ascending degree. Generated
// once by exact multiplication of the factored forms
//   q = 3: ((t-9)(t+3))^3 / t^3
//   q = 5: ((t^2-5)(t^2+5t+10)(t+5))^3 / (t^2+5t+5)^5
//   q = 7: ((t^2-5t+8)(t^2-5t+1)(t^4-5t^3+8t^2-7t+7)(t+1))^3 t / (t^3-4t^2+3t+1)^7
// and pinned by the jmap regression test.

namespace serre::modcurve {

namespace {

constexpr std::array<std::string_view, 7> kNum3{"-19683", "-13122", "-729", "756", "27", "-18", "1"};
constexpr std::array<std::string_view, 4> kDen3{"0", "0", "0", "1"};

constexpr std::array<std::string_view, 16> kNum5{
    "-15625000", "-32812500", "-22968750", "265625", "9750000", "5568750", "506250", "-830625",
    "-435000",   "-72000",    "15750",     "11175",  "2800",    "390",     "30",     "1"};
constexpr std::array<std::string_view, 11> kDen5{"3125", "15625", "34375", "43750", "35625", "19375",
                                                 "7125", "1750",  "275",   "25",    "1"};

constexpr std::array<std::string_view, 29> kNum7{
    "0",          "175616",     "-2963520",  "18984168",  "-58148643", "91840770",  "-75827661",
    "-20944902",  "167532099",  "-262662624", "223139000", "-58109436", "-133819119", "237886698",
    "-212026035", "104541150",  "3362506",   "-60368574", "64776789",  "-43406706", "21198429",
    "-7875228",   "2251424",    "-493416",   "81543",     "-9842",     "819",       "-42",
    "1"};
constexpr std::array<std::string_view, 22> kDen7{
    "1",       "21",     "161",     "448",    "-483",   "-4200", "364",   "20583",
    "-9856",   "-60144", "88557",   "25249",  "-203469", "286398", "-233923", "129038",
    "-50358",  "14021",  "-2737",   "357",    "-28",    "1"};

template <std::size_t N>
IntPolynomial from_table(const std::array<std::string_view, N>& table) {
  std::vector<Integer> coeffs;
  coeffs.reserve(N);
  for (auto s : table) coeffs.push_back(Integer::parse(s));
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

const RationalMap& jmap(int q) {
  static const RationalMap k3{from_table(kNum3), from_table(kDen3)};
  static const RationalMap k5{from_table(kNum5), from_table(kDen5)};
  static const RationalMap k7{from_table(kNum7), from_table(kDen7)};
  switch (q) {
    case 3:
      return k3;
    case 5:
      return k5;
    case 7:
      return k7;
    default:
      throw InvalidInput("no j-map for X_sp^+(" + std::to_string(q) + "); supported levels are 3, 5, 7");
  }
}

const std::vector<int>& supported_levels() {
  static const std::vector<int> kLevels{3, 5, 7};
  return kLevels;
}

}  // namespace serre::modcurve
