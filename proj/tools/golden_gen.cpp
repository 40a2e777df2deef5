// Regenerates the golden JSON files from the in-source transcriptions of the
// published tables (reference_data.hpp).  The transcriptions are validated
// against the computation by the identity battery, so a typo in either place
// is caught; this tool only serializes them with integrity hashes.

#include <filesystem>
#include <iostream>

#include "apoly/json_io.hpp"
#include "apoly/reference_data.hpp"

int main(int argc, char** argv) {
  using namespace apoly;
  const std::filesystem::path dir = argc > 1 ? argv[1] : "goldens";
  std::filesystem::create_directories(dir);

  Json a;
  a["format"] = "apoly-golden-v1";
  a["entries"]["a"] = golden_poly_entry(refdata::appendix_a_a());
  a["entries"]["b"] = golden_poly_entry(refdata::appendix_a_b());
  a["entries"]["f"] = golden_poly_entry(refdata::appendix_a_f());
  a["entries"]["g"] = golden_poly_entry(refdata::appendix_a_g());
  a["entries"]["h"] = golden_poly_entry(refdata::appendix_a_h());
  a["entries"]["h1"] = golden_poly_entry(refdata::appendix_a_h1());
  write_json_file(dir / "appendix_a.json", a);

  Json b;
  b["format"] = "apoly-golden-v1";
  b["entries"]["A2"] = golden_poly_entry(refdata::appendix_b_a2());
  b["entries"]["A4"] = golden_poly_entry(refdata::appendix_b_a4());
  write_json_file(dir / "appendix_b.json", b);

  Json c;
  c["format"] = "apoly-golden-v1";
  c["entries"]["p2"] = golden_bracket_entry(refdata::appendix_c_p2());
  c["entries"]["pm2"] = golden_bracket_entry(refdata::appendix_c_pm2());
  c["entries"]["pm4"] = golden_bracket_entry(refdata::appendix_c_pm4());
  write_json_file(dir / "appendix_c.json", c);

  std::cout << "wrote " << (dir / "appendix_a.json").string() << ", "
            << (dir / "appendix_b.json").string() << ", "
            << (dir / "appendix_c.json").string() << "\n";
  return 0;
}
