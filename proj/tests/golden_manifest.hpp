#pragma once

#include <string>
#include <vector>

namespace golden {

struct Entry {
    std::string name; // golden file stem
    std::string args; // CLI arguments after the binary
};

// One golden transcript per subcommand plus the negative-control ssr1 run.
// Matrix inputs live next to the expected outputs in tests/golden/.
inline std::vector<Entry> manifest(const std::string& dir) {
    return {
        {"bezout_z", "bezout --ring Z 12 18"},
        {"sr1_z6", "sr1 --ring Z/6 4 3"},
        {"ssr1_z6", "ssr1 --ring Z/6 2 3"},
        {"ssr1_z_negative", "ssr1 --ring Z 3 7"},
        {"sr2_z", "sr2 --ring Z 6 10 15"},
        {"toeplitz_reduce_z6", "toeplitz-reduce --ring Z/6 2 3"},
        {"toeplitz_complete_z", "toeplitz-complete --ring Z 5 2"},
        {"toeplitz_snf_z6", "toeplitz-snf --json " + dir + "/input_matrix_z6.json"},
        {"snf_z", "snf --json " + dir + "/input_matrix_z.json"},
        {"snf_z_3x3", "snf --json " + dir + "/input_matrix_z_3x3.json"},
        {"find_pq_z", "find-pq --ring Z 6 10 15"},
        {"neat_witness_z", "neat --ring Z 12 3 2"},
        {"neat_is_z6", "neat --ring Z/6 3"},
        {"neat_shift_z", "neat-shift --ring Z 4 3"},
        {"clean_z12", "clean --ring Z 4 3 3 6"},
        {"prop5_forward_z6", "prop5-forward --ring Z/6 2 3 5 1 2"},
        {"prop5_backward_z6", "prop5-backward --ring Z/6 2 3 5 2 1 1"},
        {"classify_z6", "classify --ring Z/6"},
        {"verify_thm9_2_z6", "verify --ring Z/6 --theorem THM9_2"},
        {"bezout_gf5", "bezout --ring GF(5)[x] x^2-1 x-1"},
        {"bezout_local5", "bezout --ring Z_(5) 50/3 10"},
    };
}

} // namespace golden
