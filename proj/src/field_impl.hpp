#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "hecke/local_units.hpp"
#include "hecke/quadfield.hpp"

namespace hecke {

struct QuadField::Impl {
    long d = 0;
    long disc = 0;
    FieldTag tag;
    std::optional<QuadInt> unit;
    int unit_norm = 1;

    std::once_flag class_number_once;
    long class_number = 0;

    // place (p, label) -> (order k of its class, generator of its k-th power)
    std::mutex power_mutex;
    std::map<std::pair<long, int>, std::pair<int, QuadInt>> class_powers;

    // (p, label, precision) -> unit group
    std::mutex group_mutex;
    std::map<std::tuple<long, int, int>, std::shared_ptr<const LocalUnitGroup>> unit_groups;
};

} // namespace hecke
