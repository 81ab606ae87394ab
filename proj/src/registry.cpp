#include "excessd/indexes.hpp"

namespace excessd {

// Reference registry: 2019 populations and land areas (km^2) for the 27 EU
// countries, in the conventional alphabetical order of the English names.
const std::vector<CountryRecord>& eu27_registry() {
    static const std::vector<CountryRecord> registry = {
        {"AT", "Austria", 1, 8858775, 82409, {}},
        {"BE", "Belgium", 2, 11455519, 30280, {}},
        {"BG", "Bulgaria", 3, 7000039, 108560, {}},
        {"HR", "Croatia", 4, 4076246, 55960, {}},
        {"CY", "Cyprus", 5, 875899, 9240, {}},
        {"CZ", "Czechia", 6, 10649800, 77240, {}},
        {"DK", "Denmark", 7, 5806081, 42430, {}},
        {"EE", "Estonia", 8, 1324820, 42390, {}},
        {"FI", "Finland", 9, 5517919, 303890, {}},
        {"FR", "France", 10, 67012883, 547557, {}},
        {"DE", "Germany", 11, 83019213, 348560, {}},
        {"EL", "Greece", 12, 10724599, 128900, {}},
        {"HU", "Hungary", 13, 9772756, 90530, {}},
        {"IE", "Ireland", 14, 4904240, 68890, {}},
        {"IT", "Italy", 15, 60359546, 294140, {}},
        {"LV", "Latvia", 16, 1919968, 62200, {}},
        {"LT", "Lithuania", 17, 2794184, 62674, {}},
        {"LU", "Luxembourg", 18, 613894, 2590, {}},
        {"MT", "Malta", 19, 493559, 320, {}},
        {"NL", "Netherlands", 20, 17282163, 33720, {}},
        {"PL", "Poland", 21, 37972812, 306230, {}},
        {"PT", "Portugal", 22, 10276617, 91590, {}},
        {"RO", "Romania", 23, 19414458, 230170, {}},
        {"SK", "Slovakia", 24, 5450421, 48088, {}},
        {"SI", "Slovenia", 25, 2080908, 20140, {}},
        {"ES", "Spain", 26, 46937060, 498800, {}},
        {"SE", "Sweden", 27, 10230185, 410340, {}},
    };
    return registry;
}

}  // namespace excessd
