# Core application components 