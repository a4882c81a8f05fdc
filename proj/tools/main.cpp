#include "tbsample/cli_app.hpp"

int main(int argc, char** argv) { return tbs::run_cli(argc, argv); }
