// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

// Regenerates resources/error_codes.json and resources/gas_schedule_default.json.

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "ztchain/error.hpp"
#include "ztchain/gasmeter.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: ztchain_dump_tables <resources-dir>\n";
        return 2;
    }
    const std::string dir = argv[1];
    std::ofstream(dir + "/error_codes.json") << nlohmann::json::parse(ztchain::error_table_json()).dump(2) << "\n";
    std::ofstream(dir + "/gas_schedule_default.json")
        << nlohmann::json::parse(ztchain::gas::schedule_to_json(ztchain::gas::default_schedule())).dump(2) << "\n";
    return 0;
}
