#include "ionbridge/constants.hpp"

#include <vector>

namespace ionbridge {

namespace {
// Nuclide masses in amu for the species the toolkit ships with.
const std::vector<std::pair<std::string, double>>& species_table() {
    static const std::vector<std::pair<std::string, double>> table = {
        {"Be-9", 9.012},
        {"Ca-43", 42.959},
    };
    return table;
}
} // namespace

IonSpecies ion_species(const std::string& name) {
    for (const auto& [key, amu] : species_table()) {
        if (key == name) return IonSpecies::from_amu(key, amu);
    }
    throw ValidationError("unknown ion species '" + name + "' (known: Be-9, Ca-43)");
}

double ion_mass(const std::string& name) { return ion_species(name).mass; }

} // namespace ionbridge
